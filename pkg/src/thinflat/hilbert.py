"""Chart-level points of the dual tautological bundle over ``Hilb^k``.

A point is given on a monomial chart: a set ``basis`` of exponent pairs that
descends to a basis of ``k[T1, T2] / I``, the multiplication matrices
``N1, N2`` of ``T1, T2`` on that quotient, and a functional ``a``.  The Gram
matrix ``M[u][v] = a(u * v)`` vanishes in determinant exactly on the divisor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .series import FrobeniusPresentation, RationalForm, frobenius_to_rational, geometric


class PointError(ValueError):
    pass


@dataclass(frozen=True)
class HilbertPoint:
    k: int
    basis: tuple[tuple[int, int], ...]
    N1: tuple[tuple[Fraction, ...], ...]
    N2: tuple[tuple[Fraction, ...], ...]
    a: tuple[Fraction, ...]

    @classmethod
    def make(cls, k, basis, N1, N2, a) -> "HilbertPoint":
        return cls(
            int(k),
            tuple((int(i), int(j)) for i, j in basis),
            tuple(tuple(r) for r in la.to_matrix(N1)),
            tuple(tuple(r) for r in la.to_matrix(N2)),
            tuple(Fraction(x) for x in a),
        )

    def n1(self) -> la.Matrix:
        return [list(r) for r in self.N1]

    def n2(self) -> la.Matrix:
        return [list(r) for r in self.N2]

    def unit_index(self) -> int:
        return self.basis.index((0, 0))

    def word(self, i: int, j: int) -> la.Vector:
        """``N1^i N2^j`` applied to the vector of ``1``."""
        v = [Fraction(int(t == self.unit_index())) for t in range(self.k)]
        n1, n2 = self.n1(), self.n2()
        for _ in range(j):
            v = la.matvec(n2, v)
        for _ in range(i):
            v = la.matvec(n1, v)
        return v


def point_validate(p: HilbertPoint) -> str | None:
    """Name of the first violated invariant, or ``None`` when the point is valid."""
    k = p.k
    square = all(len(r) == k for r in p.N1) and all(len(r) == k for r in p.N2)
    if k < 0 or len(p.basis) != k or len(p.N1) != k or len(p.N2) != k or not square or len(p.a) != k:
        return "shape"
    if len(set(p.basis)) != k:
        return "shape"
    if k and (0, 0) not in p.basis:
        return "basis contains 1"
    n1, n2 = p.n1(), p.n2()
    if la.matmul(n1, n2) != la.matmul(n2, n1):
        return "commutativity"
    for t, (i, j) in enumerate(p.basis):
        expected = [Fraction(int(s == t)) for s in range(k)]
        if p.word(i, j) != expected:
            return "chart consistency"
    return None


def _require_valid(p: HilbertPoint) -> None:
    problem = point_validate(p)
    if problem is not None:
        raise PointError(f"invalid point: {problem}")


def gram_point(p: HilbertPoint) -> tuple[la.Matrix, Fraction]:
    """Gram matrix ``a(u v)`` over the chart basis and its exact determinant."""
    _require_valid(p)
    m = [
        [la.dot(p.a, p.word(u[0] + v[0], u[1] + v[1])) for v in p.basis]
        for u in p.basis
    ]
    return m, la.det(m)


@dataclass(frozen=True)
class PointClass:
    k: int
    m: int
    in_Dk: bool
    det: Fraction


def classify_point(p: HilbertPoint) -> PointClass:
    """``m`` is the Gram rank (codimension of the syntactic ideal); on the divisor iff ``det = 0``."""
    m, d = gram_point(p)
    return PointClass(p.k, la.rank(m), d == 0, d)


def point_to_series(p: HilbertPoint) -> RationalForm:
    _require_valid(p)
    f = FrobeniusPresentation(p.k, p.N1, p.N2, p.a, p.unit_index() if p.k else 0)
    return frobenius_to_rational(f)


def rec1_chart(lam1, lam2, lam) -> RationalForm:
    """``lam / ((1 - lam1 T1)(1 - lam2 T2))``; ``lam = 0`` gives the zero series."""
    return geometric(lam, lam1, lam2)


def t2_point(a=(0, 1)) -> HilbertPoint:
    """The point of ``Hilb^2`` with ideal ``(T1, T2^2)`` on the chart ``{1, T2}``."""
    return HilbertPoint.make(2, [(0, 0), (0, 1)], [[0, 0], [0, 0]], [[0, 0], [1, 0]], a)
