"""Trace pairings, Gram matrices and the state spaces ``A(n)``.

Two evaluation routes are kept apart on purpose.  The closure route realizes
decorated cobordisms, glues them with the splice rule and reads the
coefficients of the series.  The skein route glues only the minimal
cobordisms, adds the decoration exponents to each merged component and
evaluates the resulting monomials inside the syntactic algebra.  They agree
exactly when the gluing convention and the algebra are both right.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import cobordism as cb
from . import linalg as la
from .cobordism import Cobordism
from .series import RationalForm, SyntacticAlgebra, evaluate_floating
from .skein import (
    SkeinBasisElement,
    SkeinError,
    SkeinVector,
    default_cap,
    realize,
    reduce,
    reflect_element,
    skein_basis,
    skein_dim,
    skein_tensor,
)

METHODS = ("closure", "skein")


def trace_alpha(z: RationalForm, x: Cobordism | SkeinVector) -> Fraction:
    """``alpha`` of the closure of an endomorphism, extended linearly."""
    if isinstance(x, SkeinVector):
        if x.n != x.m:
            raise SkeinError(f"trace needs an endomorphism, got {x.n}->{x.m}")
        return sum((c * trace_alpha(z, f) for c, f in realize(x)), Fraction(0))
    if x.n != x.m:
        raise cb.CobordismError(f"trace needs an endomorphism, got {x.n}->{x.m}")
    return evaluate_floating(z, cb.close_up(x))


def pair_closure(alg: SyntacticAlgebra, v: SkeinBasisElement, z: SkeinBasisElement) -> Fraction:
    """``tr(z o v)`` by gluing realized cobordisms."""
    return trace_alpha(alg.series, cb.compose(z.realize(), v.realize()))


def pair_skein(alg: SyntacticAlgebra, v: SkeinBasisElement, z: SkeinBasisElement) -> Fraction:
    """``tr(z o v)`` from the minimal gluing plus decoration exponents."""
    glued = cb.glue_pair_closure(z.minimal, v.minimal)
    decorations = (v.decoration, z.decoration)
    out = Fraction(1)
    for fc, origin in zip(glued.new_floating, glued.origins):
        i, j = fc.ell, fc.genus
        for piece, ci in origin:
            a, b = decorations[piece][ci]
            i, j = i + a, j + b
        out *= alg.evaluate(i, j)
        if out == 0:
            break
    return out


_PAIRINGS = {"closure": pair_closure, "skein": pair_skein}


def pairing(alg: SyntacticAlgebra, v: SkeinBasisElement, z: SkeinBasisElement, method: str = "closure") -> Fraction:
    try:
        fn = _PAIRINGS[method]
    except KeyError:
        raise ValueError(f"unknown pairing method {method!r}; expected one of {METHODS}") from None
    return fn(alg, v, z)


@dataclass(frozen=True)
class GramMatrix:
    """Pairing ``(x, y) = alpha(reflect(y) o x)`` on the skein basis of ``Hom(0, n)``."""

    n: int
    basis: tuple[SkeinBasisElement, ...]
    entries: tuple[tuple[Fraction, ...], ...]
    method: str = "closure"
    _rank: list = field(default_factory=list, compare=False, repr=False)

    @property
    def m(self) -> int:
        return 0

    @property
    def size(self) -> int:
        return len(self.basis)

    @property
    def rank(self) -> int:
        if not self._rank:
            self._rank.append(la.rank(self.entries))
        return self._rank[0]

    def rows(self) -> la.Matrix:
        return [list(r) for r in self.entries]


def gram(alg: SyntacticAlgebra, n: int, method: str = "closure", cap: int | None = None) -> GramMatrix:
    basis = tuple(skein_basis(alg, 0, n, cap))
    mirrors = [reflect_element(e) for e in basis]
    rows = []
    for x in basis:
        rows.append(tuple(pairing(alg, x, ry, method) for ry in mirrors))
    return GramMatrix(n, basis, tuple(rows), method)


def state_dim(alg: SyntacticAlgebra, n: int, method: str = "closure", cap: int | None = None) -> int:
    """``dim A(n)``: rank of the Gram matrix of ``Hom(0, n)``."""
    if alg.d == 0:
        return 0
    return gram(alg, n, method, cap).rank


def dim_series(alg: SyntacticAlgebra, N: int, method: str = "closure", cap: int | None = None) -> list[int]:
    cap = default_cap() if cap is None else cap
    if N > cap:
        raise SkeinError(f"N = {N} exceeds the arity cap {cap}")
    return [state_dim(alg, n, method, cap) for n in range(N + 1)]


def dims_table(alg: SyntacticAlgebra, N: int, cap: int | None = None) -> list[tuple[int, int, int]]:
    """Rows ``(n, skein_dim(0, n), state_dim(n))``."""
    cap = default_cap() if cap is None else cap
    dims = dim_series(alg, N, cap=cap)
    return [(n, skein_dim(alg, 0, n, cap), dims[n]) for n in range(N + 1)]


def pair_vectors(alg: SyntacticAlgebra, v: SkeinVector, z: SkeinVector, method: str = "closure") -> Fraction:
    """Bilinear extension of ``tr(z o v)``."""
    if (v.n, v.m) != (z.m, z.n):
        raise SkeinError(f"cannot pair {v.n}->{v.m} with {z.n}->{z.m}")
    total = Fraction(0)
    for e, a in v.terms.items():
        for f, b in z.terms.items():
            total += a * b * pairing(alg, e, f, method)
    return total


def is_negligible(alg: SyntacticAlgebra, v: SkeinVector, method: str = "closure", cap: int | None = None) -> bool:
    """Whether ``tr(z o v) = 0`` for every skein basis element ``z`` of ``Hom(m, n)``."""
    if v.is_zero():
        return True
    for z in skein_basis(alg, v.m, v.n, cap):
        s = Fraction(0)
        for e, a in v.terms.items():
            s += a * pairing(alg, e, z, method)
        if s:
            return False
    return True


def state_multiply(alg: SyntacticAlgebra, u: SkeinVector, v: SkeinVector, cap: int | None = None) -> SkeinVector:
    """Product in ``A(n) x A(m) -> A(n + m)`` by juxtaposition."""
    if u.n or v.n:
        raise SkeinError("state classes are represented by vectors in Hom(0, n)")
    cap = default_cap() if cap is None else cap
    if u.m + v.m > cap:
        raise SkeinError(f"product arity {u.m + v.m} exceeds the arity cap {cap}")
    return skein_tensor(alg, u, v)


def state_equal(alg: SyntacticAlgebra, u: SkeinVector, v: SkeinVector, cap: int | None = None) -> bool:
    """Equality of classes in ``A(n)``: the difference is negligible."""
    return is_negligible(alg, u - v, cap=cap)


def unit_state(alg: SyntacticAlgebra) -> SkeinVector:
    return reduce(alg, [(1, cb.identity(0))])


def permute_state(alg: SyntacticAlgebra, u: SkeinVector, perm: Cobordism) -> SkeinVector:
    """Act on a vector of ``Hom(0, n)`` by post-composing a permutation cobordism."""
    terms = [(c, cb.compose(perm, f)) for c, f in realize(u)]
    return reduce(alg, terms, (0, perm.m))
