"""Minimal cobordisms and skein coordinates over a syntactic algebra.

A minimal cobordism has genus zero and no holes on every component, so it is
the same thing as a set partition of the boundary tokens together with a
permutation of each block (its cycles are the boundary circles).  Decorating
each component with a basis monomial of the syntactic algebra gives a basis
of the skein hom space.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import cobordism as cb
from .cobordism import Cobordism, Token, ViewableComponent
from .series import SyntacticAlgebra, evaluate_floating

DEFAULT_CAP = 7


class SkeinError(ValueError):
    pass


def default_cap() -> int:
    """Arity cap, overridable through the ``TFS_CAP`` environment variable."""
    raw = os.environ.get("TFS_CAP")
    if raw is None:
        return DEFAULT_CAP
    cap = int(raw)
    if cap < 0:
        raise SkeinError("TFS_CAP must be nonnegative")
    return cap


def set_partitions(items: Sequence) -> Iterator[list[list]]:
    """All set partitions of ``items``; blocks keep the input order."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1 :]


def _cycles_of(perm: dict) -> tuple[tuple, ...]:
    seen, out = set(), []
    for start in perm:
        if start in seen:
            continue
        cyc = []
        t = start
        while t not in seen:
            seen.add(t)
            cyc.append(t)
            t = perm[t]
        out.append(tuple(cyc))
    return tuple(out)


def _block_components(block: list[Token]) -> list[ViewableComponent]:
    out = []
    for image in itertools.permutations(block):
        perm = dict(zip(block, image))
        out.append(ViewableComponent(0, 0, _cycles_of(perm)).canonical())
    return out


def _tokens(n: int, m: int) -> list[Token]:
    return [cb.B(i) for i in range(1, n + 1)] + [cb.T(j) for j in range(1, m + 1)]


@lru_cache(maxsize=64)
def _enumerate(n: int, m: int) -> tuple[Cobordism, ...]:
    out = []
    for part in set_partitions(_tokens(n, m)):
        choices = [_block_components(block) for block in part]
        for comps in itertools.product(*choices):
            comps = tuple(sorted(comps, key=ViewableComponent.sort_key))
            out.append(Cobordism(n, m, comps, ()))
    out.sort(key=lambda f: (len(f.viewable), f.sort_key()))
    return tuple(out)


def enumerate_minimal(n: int, m: int, cap: int | None = None) -> list[Cobordism]:
    """All minimal cobordisms ``n -> m``, by component count then canonical order."""
    cap = default_cap() if cap is None else cap
    if n + m > cap:
        raise SkeinError(f"n + m = {n + m} exceeds the arity cap {cap}")
    return list(_enumerate(n, m))


def skein_dim(alg: SyntacticAlgebra, n: int, m: int, cap: int | None = None) -> int:
    """``sum over M(n, m) of d ** components``; zero for the zero algebra."""
    if alg.d == 0:
        return 0
    return sum(alg.d ** len(y.viewable) for y in enumerate_minimal(n, m, cap))


# -- skein vectors --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SkeinBasisElement:
    """A minimal cobordism decorated by one basis exponent per component."""

    minimal: Cobordism
    decoration: tuple[tuple[int, int], ...] = ()
    _key: tuple = field(default=(), repr=False)

    def __post_init__(self):
        if len(self.decoration) != len(self.minimal.viewable):
            raise SkeinError("decoration length must equal the number of components")
        if not all(c.is_minimal() for c in self.minimal.viewable) or self.minimal.floating:
            raise SkeinError("skein basis elements need a minimal cobordism")
        object.__setattr__(self, "_key", (self.minimal.sort_key(), self.decoration))

    def __hash__(self) -> int:
        return hash(self._key)

    def __eq__(self, other) -> bool:
        return isinstance(other, SkeinBasisElement) and self._key == other._key

    def __lt__(self, other: "SkeinBasisElement") -> bool:
        return self._key < other._key

    def realize(self) -> Cobordism:
        return cb.decorate(self.minimal, self.decoration)

    def reflect(self) -> "SkeinBasisElement":
        return reflect_element(self)


def reflect_element(e: SkeinBasisElement) -> SkeinBasisElement:
    """Mirror image, carrying each component's decoration along."""
    r = cb.reflect(e.minimal)
    dec = {}
    for comp, pair in zip(e.minimal.viewable, e.decoration):
        key = frozenset(cb.Token("T" if t.side == "B" else "B", t.index) for t in comp.tokens)
        dec[key] = pair
    return SkeinBasisElement(r, tuple(dec[frozenset(c.tokens)] for c in r.viewable))


def skein_basis(alg: SyntacticAlgebra, n: int, m: int, cap: int | None = None) -> list[SkeinBasisElement]:
    """Companion basis of ``Hom(n, m)``: minimal cobordisms times basis monomials."""
    if alg.d == 0:
        return []
    out = []
    for y in enumerate_minimal(n, m, cap):
        for dec in itertools.product(alg.basis, repeat=len(y.viewable)):
            out.append(SkeinBasisElement(y, tuple(dec)))
    return out


@dataclass(frozen=True)
class SkeinVector:
    n: int
    m: int
    alg: SyntacticAlgebra = field(repr=False)
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        for e in self.terms:
            if e.minimal.arity != (self.n, self.m):
                raise SkeinError("skein vector term has the wrong arity")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkeinVector):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[SkeinBasisElement, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0]._key)

    def __add__(self, other: "SkeinVector") -> "SkeinVector":
        _check_same(self, other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, Fraction(0)) + c
        return SkeinVector(self.n, self.m, self.alg, {e: c for e, c in acc.items() if c})

    def scale(self, c) -> "SkeinVector":
        c = Fraction(c)
        if c == 0:
            return SkeinVector(self.n, self.m, self.alg, {})
        return SkeinVector(self.n, self.m, self.alg, {e: c * x for e, x in self.terms.items()})

    def __neg__(self) -> "SkeinVector":
        return self.scale(-1)

    def __sub__(self, other: "SkeinVector") -> "SkeinVector":
        return self + (-other)


def _check_same(v: SkeinVector, w: SkeinVector) -> None:
    if (v.n, v.m) != (w.n, w.m):
        raise SkeinError("skein vectors have different arities")
    if v.alg != w.alg:
        raise SkeinError("skein vectors live over different algebras")


def zero_vector(alg: SyntacticAlgebra, n: int, m: int) -> SkeinVector:
    return SkeinVector(n, m, alg, {})


def basis_vector(alg: SyntacticAlgebra, e: SkeinBasisElement) -> SkeinVector:
    return SkeinVector(e.minimal.n, e.minimal.m, alg, {e: Fraction(1)})


def reduce(alg: SyntacticAlgebra, terms: Iterable[tuple[object, Cobordism]], arity: tuple[int, int] | None = None) -> SkeinVector:
    """Skein coordinates of a linear combination of cobordisms."""
    terms = [(Fraction(c), f) for c, f in terms]
    arities = {f.arity for _, f in terms}
    if arity is not None:
        arities.add(tuple(arity))
    if len(arities) > 1:
        raise SkeinError(f"mixed arities in reduce: {sorted(arities)}")
    if not arities:
        raise SkeinError("reduce needs at least one term or an explicit arity")
    n, m = arities.pop()
    acc: dict[SkeinBasisElement, Fraction] = {}
    if alg.d == 0:
        return SkeinVector(n, m, alg, acc)
    for c, f in terms:
        if c == 0:
            continue
        if f.floating:
            c *= evaluate_floating(alg.series, f.floating)
            if c == 0:
                continue
        minimal, exps, _ = cb.split_minimal(f)
        factors = []
        for i, j in exps:
            nf = alg.monomial_vector(i, j)
            factors.append([(alg.basis[k], x) for k, x in enumerate(nf) if x])
        for combo in itertools.product(*factors):
            coef = c
            for _, x in combo:
                coef *= x
            e = SkeinBasisElement(minimal, tuple(b for b, _ in combo))
            acc[e] = acc.get(e, Fraction(0)) + coef
    return SkeinVector(n, m, alg, {e: x for e, x in acc.items() if x})


def reduce_one(alg: SyntacticAlgebra, f: Cobordism) -> SkeinVector:
    return reduce(alg, [(1, f)])


def realize(v: SkeinVector) -> list[tuple[Fraction, Cobordism]]:
    """Representative linear combination of decorated cobordisms."""
    return [(c, e.realize()) for e, c in v.items()]


def skein_compose(alg: SyntacticAlgebra, v: SkeinVector, w: SkeinVector) -> SkeinVector:
    """``w o v`` for ``v: n -> m`` and ``w: m -> k``."""
    if v.alg != alg or w.alg != alg:
        raise SkeinError("skein vectors live over a different algebra")
    if v.m != w.n:
        raise SkeinError(f"cannot compose {w.n}->{w.m} after {v.n}->{v.m}")
    terms = []
    for a, x in realize(v):
        for b, y in realize(w):
            terms.append((a * b, cb.compose(y, x)))
    return reduce(alg, terms, (v.n, w.m))


def skein_tensor(alg: SyntacticAlgebra, v: SkeinVector, w: SkeinVector) -> SkeinVector:
    terms = []
    for a, x in realize(v):
        for b, y in realize(w):
            terms.append((a * b, cb.tensor(x, y)))
    return reduce(alg, terms, (v.n + w.n, v.m + w.m))


def identity_vector(alg: SyntacticAlgebra, n: int) -> SkeinVector:
    return reduce(alg, [(1, cb.identity(n))])

