"""Two-variable evaluations, recognizability, and the syntactic algebra.

An evaluation assigns ``alpha[l, g]`` to a floating surface with ``l + 1``
boundary circles and genus ``g``; it is packaged as the generating function
``Z = sum alpha[l, g] T1^l T2^g``.  Recognizable evaluations are exactly the
rational ones, ``Z = P(T1, T2) / (Q1(T1) Q2(T2))``, and for those the Hankel
matrix ``H[(a, b), (c, d)] = alpha[a + c, b + d]`` has finite rank equal to
the dimension of the syntactic algebra ``k[T1, T2] / I``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import linalg as la
from .poly import Exp, Poly2, strip, upoly_mul


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class RationalForm:
    """``P / (Q1(T1) Q2(T2))`` with ``Q1(0) = Q2(0) = 1``.

    ``Q1`` and ``Q2`` are coefficient tuples, lowest degree first.
    """

    P: Poly2
    Q1: tuple[Fraction, ...] = (Fraction(1),)
    Q2: tuple[Fraction, ...] = (Fraction(1),)

    def __post_init__(self):
        object.__setattr__(self, "Q1", strip(self.Q1))
        object.__setattr__(self, "Q2", strip(self.Q2))
        if not self.Q1 or self.Q1[0] != 1 or not self.Q2 or self.Q2[0] != 1:
            raise SeriesError("denominators must satisfy Q1(0) = Q2(0) = 1")

    @classmethod
    def make(cls, P, Q1: Sequence = (1,), Q2: Sequence = (1,)) -> "RationalForm":
        """Build a form, rescaling so that the denominators are normalized."""
        P = P if isinstance(P, Poly2) else Poly2(P)
        q1, q2 = strip(Q1), strip(Q2)
        if not q1 or not q2 or q1[0] == 0 or q2[0] == 0:
            raise SeriesError("Q1(0) and Q2(0) must be nonzero")
        s = q1[0] * q2[0]
        return cls(P * (1 / s), tuple(c / q1[0] for c in q1), tuple(c / q2[0] for c in q2))

    @property
    def is_zero(self) -> bool:
        return self.P.is_zero()

    @property
    def deg_q1(self) -> int:
        return len(self.Q1) - 1

    @property
    def deg_q2(self) -> int:
        return len(self.Q2) - 1

    @property
    def is_univariate_t2(self) -> bool:
        return self.P.deg1 <= 0 and self.deg_q1 == 0

    def __str__(self) -> str:
        q1 = str(Poly2.in_t1(self.Q1))
        q2 = str(Poly2.in_t2(self.Q2))
        return f"({self.P}) / (({q1})*({q2}))"


def zero_series() -> RationalForm:
    return RationalForm(Poly2())


def polynomial_series(P) -> RationalForm:
    return RationalForm.make(P)


def geometric(lam=1, lam1=1, lam2=1) -> RationalForm:
    """``lam / ((1 - lam1 T1)(1 - lam2 T2))``."""
    if Fraction(lam) == 0:
        return zero_series()
    return RationalForm.make(Poly2.const(lam), (1, -Fraction(lam1)), (1, -Fraction(lam2)))


@dataclass(frozen=True)
class CoeffTable:
    """``rows[l][g] = alpha[l, g]`` for ``l <= L``, ``g <= G``."""

    L: int
    G: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.L + 1 or any(len(r) != self.G + 1 for r in self.rows):
            raise SeriesError("table shape does not match (L, G)")

    def __getitem__(self, lg: Exp) -> Fraction:
        return self.rows[lg[0]][lg[1]]

    @classmethod
    def from_function(cls, L: int, G: int, f) -> "CoeffTable":
        return cls(L, G, tuple(tuple(Fraction(f(l, g)) for g in range(G + 1)) for l in range(L + 1)))


# -- coefficient extraction --------------------------------------------------

class _Inverse:
    """Power series of ``1 / q`` for ``q(0) = 1``, extended on demand."""

    def __init__(self, q: tuple[Fraction, ...]):
        self.q = q
        self.c = [Fraction(1)]

    def __getitem__(self, k: int) -> Fraction:
        q, c = self.q, self.c
        while len(c) <= k:
            n = len(c)
            c.append(-sum((q[i] * c[n - i] for i in range(1, min(n, len(q) - 1) + 1)), Fraction(0)))
        return c[k]


@lru_cache(maxsize=256)
def _inverse(q: tuple[Fraction, ...]) -> _Inverse:
    return _Inverse(q)


def coeff(z: RationalForm, l: int, g: int) -> Fraction:
    """``alpha[l, g]``: convolution of ``P`` with the expansions of ``1/Q1``, ``1/Q2``."""
    if l < 0 or g < 0:
        raise SeriesError("coefficient indices must be nonnegative")
    inv1, inv2 = _inverse(z.Q1), _inverse(z.Q2)
    total = Fraction(0)
    for (i, j), p in z.P.items():
        if i <= l and j <= g:
            total += p * inv1[l - i] * inv2[g - j]
    return total


def coeff_table(z: RationalForm, L: int, G: int) -> CoeffTable:
    return CoeffTable.from_function(L, G, lambda l, g: coeff(z, l, g))


def evaluate_floating(z: RationalForm, floating: Iterable) -> Fraction:
    """Multiplicative evaluation of a multiset of floating components."""
    out = Fraction(1)
    for fc in floating:
        out *= coeff(z, fc.ell, fc.genus)
        if out == 0:
            return out
    return out


# -- Hankel matrices ---------------------------------------------------------

def grlex_monomials(n1: int, n2: int) -> list[Exp]:
    """Exponents ``(a, b)`` with ``a <= n1``, ``b <= n2``, ascending graded lex, T1 > T2."""
    box = [(a, b) for a in range(n1 + 1) for b in range(n2 + 1)]
    return sorted(box, key=lambda e: (e[0] + e[1], e[0]))


def hankel(z: RationalForm, box: tuple[int, int]) -> la.Matrix:
    mons = grlex_monomials(*box)
    return [[coeff(z, a + c, b + d) for (c, d) in mons] for (a, b) in mons]


# -- syntactic algebra -------------------------------------------------------

def _tt(m) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(r) for r in m)


@dataclass(frozen=True)
class SyntacticAlgebra:
    """``A = k[T1, T2] / I`` with its monomial basis and multiplication matrices.

    Coordinates are taken in ``basis`` (exponent pairs, ascending graded lex);
    ``M1[t][s]`` is the ``t``-th coordinate of ``T1 * basis[s]``.
    """

    d: int
    basis: tuple[Exp, ...]
    M1: tuple[tuple[Fraction, ...], ...]
    M2: tuple[tuple[Fraction, ...], ...]
    alphavec: tuple[Fraction, ...]
    q1: tuple[Fraction, ...]
    q2: tuple[Fraction, ...]
    series: RationalForm | None = None
    box: tuple[int, int] = (0, 0)
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def degenerate(self) -> bool:
        return self.d == 0

    @property
    def gram(self) -> la.Matrix:
        """``G[s][t] = alpha(basis[s] * basis[t])``."""
        return [[dot_alpha(self, _add(u, v)) for v in self.basis] for u in self.basis]

    def monomial_vector(self, i: int, j: int) -> tuple[Fraction, ...]:
        """Coordinates of ``T1^i T2^j`` modulo the syntactic ideal."""
        key = (i, j)
        cache = self._cache
        if key in cache:
            return cache[key]
        if key == (0, 0):
            vec = tuple(Fraction(int(k == 0)) for k in range(self.d))
        elif i > 0:
            vec = tuple(la.matvec(self.M1, self.monomial_vector(i - 1, j)))
        else:
            vec = tuple(la.matvec(self.M2, self.monomial_vector(0, j - 1)))
        cache[key] = vec
        return vec

    def evaluate(self, i: int, j: int) -> Fraction:
        """``alpha(T1^i T2^j)`` computed inside the algebra."""
        if self.d == 0:
            return Fraction(0)
        return la.dot(self.alphavec, self.monomial_vector(i, j))


def _add(u: Exp, v: Exp) -> Exp:
    return (u[0] + v[0], u[1] + v[1])


def dot_alpha(alg: SyntacticAlgebra, e: Exp) -> Fraction:
    if alg.series is not None:
        return coeff(alg.series, *e)
    return alg.evaluate(*e)


def _rank_at(z: RationalForm, box: tuple[int, int]) -> int:
    return la.rank(hankel(z, box))


def stable_box(z: RationalForm) -> tuple[tuple[int, int], int]:
    """Smallest certified box and the Hankel rank there."""
    n1 = max(z.P.deg1, 0) + z.deg_q1 + 1
    n2 = max(z.P.deg2, 0) + z.deg_q2 + 1
    r = _rank_at(z, (n1, n2))
    while True:
        r_next = _rank_at(z, (n1 + 1, n2 + 1))
        if r_next == r:
            return (n1, n2), r
        n1, n2, r = n1 + 1, n2 + 1, r_next


def syntactic_algebra(z: RationalForm) -> SyntacticAlgebra:
    """Build the syntactic algebra of a rational evaluation.

    The dimension is the Hankel rank, certified by enlarging the box once;
    the basis is the greedy set of independent Hankel columns in graded-lex
    order, which is automatically closed under division.
    """
    if z.is_zero:
        return SyntacticAlgebra(0, (), (), (), (), (Fraction(1),), (Fraction(1),), z, (0, 0))
    box, d = stable_box(z)
    mons = grlex_monomials(*box)
    h = [[coeff(z, a + c, b + d_) for (c, d_) in mons] for (a, b) in mons]
    cols = la.independent_columns(h)
    basis = tuple(mons[c] for c in cols)
    if len(basis) != d or basis[0] != (0, 0):  # pragma: no cover - guarded by theory
        raise SeriesError("Hankel basis selection is inconsistent")

    gram = [[coeff(z, *_add(u, v)) for v in basis] for u in basis]

    def mult_matrix(shift: Exp) -> la.Matrix:
        cols_ = []
        for s in basis:
            target = _add(s, shift)
            rhs = [coeff(z, *_add(u, target)) for u in basis]
            x = la.solve(gram, rhs)
            if x is None:  # pragma: no cover - gram is nondegenerate
                raise SeriesError("singular Gram matrix in the syntactic algebra")
            cols_.append(x)
        return la.transpose(cols_)

    m1 = mult_matrix((1, 0))
    m2 = mult_matrix((0, 1))
    alphavec = tuple(coeff(z, *u) for u in basis)
    q1 = tuple(la.minpoly(m1))
    q2 = tuple(la.minpoly(m2))
    return SyntacticAlgebra(d, basis, _tt(m1), _tt(m2), alphavec, q1, q2, z, box)


def normal_form(alg: SyntacticAlgebra, p) -> list[Fraction]:
    """Coordinates of ``p`` modulo the syntactic ideal; zero iff ``p`` is in it."""
    if alg.d == 0:
        raise SeriesError("normal form undefined for the zero algebra")
    p = p if isinstance(p, Poly2) else Poly2(p)
    out = [Fraction(0)] * alg.d
    for (i, j), c in p.items():
        v = alg.monomial_vector(i, j)
        for k in range(alg.d):
            if v[k]:
                out[k] += c * v[k]
    return out


def alpha_of(alg: SyntacticAlgebra, p) -> Fraction:
    """``alpha(p) = alphavec . normal_form(p)``."""
    if alg.d == 0:
        return Fraction(0)
    return la.dot(alg.alphavec, normal_form(alg, p))


def univariate_in_ideal(alg: SyntacticAlgebra, coeffs: Sequence, var: int) -> bool:
    """Whether ``sum coeffs[k] T_var^k`` lies in the syntactic ideal."""
    p = Poly2.in_t1(coeffs) if var == 1 else Poly2.in_t2(coeffs)
    return all(x == 0 for x in normal_form(alg, p))


# -- Frobenius presentations -------------------------------------------------

@dataclass(frozen=True)
class FrobeniusPresentation:
    """Commuting generators ``G1, G2`` on ``k^dim`` with a trace vector ``beta``."""

    dim: int
    G1: tuple[tuple[Fraction, ...], ...]
    G2: tuple[tuple[Fraction, ...], ...]
    beta: tuple[Fraction, ...]
    unit: int = 0

    @classmethod
    def make(cls, G1, G2, beta, unit: int = 0) -> "FrobeniusPresentation":
        g1, g2 = la.to_matrix(G1), la.to_matrix(G2)
        return cls(len(g1), _tt(g1), _tt(g2), tuple(Fraction(b) for b in beta), unit)

    def word_vector(self, i: int, j: int) -> la.Vector:
        v = [Fraction(int(k == self.unit)) for k in range(self.dim)]
        g1, g2 = [list(r) for r in self.G1], [list(r) for r in self.G2]
        for _ in range(j):
            v = la.matvec(g2, v)
        for _ in range(i):
            v = la.matvec(g1, v)
        return v

    def validate(self) -> None:
        g1, g2 = [list(r) for r in self.G1], [list(r) for r in self.G2]
        if la.matmul(g1, g2) != la.matmul(g2, g1):
            raise SeriesError("generators do not commute")
        if self.dim == 0:
            return
        vectors = [self.word_vector(i, j) for i in range(self.dim) for j in range(self.dim)]
        if la.rank(vectors) != self.dim:
            raise SeriesError("the unit vector is not cyclic for the generators")


def as_frobenius(alg: SyntacticAlgebra) -> FrobeniusPresentation:
    return FrobeniusPresentation(alg.d, alg.M1, alg.M2, alg.alphavec, 0)


def _reversed_charpoly(g: la.Matrix) -> tuple[Fraction, ...]:
    cp = la.charpoly(g)  # low first, monic
    return strip(list(reversed(cp)))


def frobenius_to_rational(f: FrobeniusPresentation) -> RationalForm:
    """Series ``sum beta(g1^l g2^g) T1^l T2^g`` as a rational form.

    The denominators are the reversed characteristic polynomials of the
    generators; by Cayley-Hamilton the numerator is supported in the box
    ``[0, dim) x [0, dim)``.
    """
    f.validate()
    k = f.dim
    if k == 0 or all(b == 0 for b in f.beta):
        return zero_series()
    g1, g2 = [list(r) for r in f.G1], [list(r) for r in f.G2]
    q1, q2 = _reversed_charpoly(g1), _reversed_charpoly(g2)
    alpha = {}
    for i in range(k):
        for j in range(k):
            alpha[(i, j)] = la.dot(f.beta, f.word_vector(i, j))
    P = {}
    for i in range(k):
        for j in range(k):
            s = Fraction(0)
            for a in range(min(i, len(q1) - 1) + 1):
                for b in range(min(j, len(q2) - 1) + 1):
                    s += alpha[(i - a, j - b)] * q1[a] * q2[b]
            P[(i, j)] = s
    return RationalForm(Poly2(P), q1, q2)


# -- equality and the closed-surface packing -----------------------------------

def _den(z: RationalForm) -> Poly2:
    return Poly2.in_t1(z.Q1) * Poly2.in_t2(z.Q2)


def rational_equal(a: RationalForm, b: RationalForm) -> bool:
    return a.P * _den(b) == b.P * _den(a)


def reduce_form(z: RationalForm) -> RationalForm:
    """Cancel common powers of ``(1 - c T)`` factors is not attempted; only zero is normalized."""
    return zero_series() if z.is_zero else z


def beta_pack(zalpha: RationalForm, zgamma: RationalForm) -> RationalForm:
    """``T1 * Z_alpha(T1, T2) + Z_gamma(T2)`` over a common denominator."""
    if not zgamma.is_univariate_t2:
        raise SeriesError("Z_gamma must depend on T2 only")
    t1 = Poly2.monomial(1, 0)
    P = t1 * zalpha.P * Poly2.in_t2(zgamma.Q2) + zgamma.P * Poly2.in_t1(zalpha.Q1) * Poly2.in_t2(zalpha.Q2)
    out = RationalForm(P, zalpha.Q1, upoly_mul(zalpha.Q2, zgamma.Q2))
    return reduce_form(out)


def beta_unpack(zbeta: RationalForm) -> tuple[RationalForm, RationalForm]:
    """Inverse of :func:`beta_pack`: ``Z_gamma = Z(0, T2)``, ``Z_alpha = (Z - Z(0, T2)) / T1``."""
    p0 = zbeta.P.at_t1_zero()
    zgamma = reduce_form(RationalForm(p0, (Fraction(1),), zbeta.Q2))
    num = zbeta.P - p0 * Poly2.in_t1(zbeta.Q1)
    zalpha = reduce_form(RationalForm(num.divide_t1() if num else num, zbeta.Q1, zbeta.Q2))
    return zalpha, zgamma


# -- fitting -----------------------------------------------------------------

def fit_rational(
    table: CoeffTable, bounds: tuple[int, int, int, int]
) -> RationalForm | None:
    """Fit ``P / (Q1 Q2)`` with ``deg Q1, deg Q2, deg_T1 P, deg_T2 P`` bounded.

    Each denominator is found from the recurrence it forces on the table; the
    numerator is then the truncated product.  A returned form reproduces
    every table entry, which is evidence about the sampled box only.
    """
    dq1, dq2, dp1, dp2 = bounds
    if min(bounds) < 0:
        raise SeriesError("bounds must be nonnegative")
    if table.L <= dq1 + dp1 or table.G <= dq2 + dp2:
        raise SeriesError(
            f"table {table.L}x{table.G} too small for bounds {bounds}: need L > {dq1 + dp1}, G > {dq2 + dp2}"
        )
    a = table

    def recurrence(deg: int, pdeg: int, along_t1: bool) -> tuple[Fraction, ...] | None:
        if deg == 0:
            return (Fraction(1),)
        rows, rhs = [], []
        n_along, n_across = (a.L, a.G) if along_t1 else (a.G, a.L)
        for k in range(pdeg + 1, n_along + 1):
            for other in range(n_across + 1):
                def at(t):
                    return a[(t, other)] if along_t1 else a[(other, t)]
                row = [at(k - i) if k - i >= 0 else Fraction(0) for i in range(1, deg + 1)]
                rows.append(row)
                rhs.append(-at(k))
        sol = la.solve(rows, rhs)
        return None if sol is None else (Fraction(1), *sol)

    q1 = recurrence(dq1, dp1, True)
    q2 = recurrence(dq2, dp2, False)
    if q1 is None or q2 is None:
        return None
    P = {}
    for i in range(dp1 + 1):
        for j in range(dp2 + 1):
            s = Fraction(0)
            for x in range(min(i, len(q1) - 1) + 1):
                for y in range(min(j, len(q2) - 1) + 1):
                    s += a[(i - x, j - y)] * q1[x] * q2[y]
            P[(i, j)] = s
    try:
        z = RationalForm(Poly2(P), q1, q2)
    except SeriesError:
        return None
    for l in range(a.L + 1):
        for g in range(a.G + 1):
            if coeff(z, l, g) != a[(l, g)]:
                return None
    return reduce_form(z)
