from fractions import Fraction

import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from thinflat import linalg as la

small = st.integers(-4, 4)


def matrices(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    )


def square(n=st.integers(1, 5)):
    return n.flatmap(lambda k: st.lists(st.lists(small, min_size=k, max_size=k), min_size=k, max_size=k))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_sympy(m):
    assert la.rank(la.to_matrix(m)) == sp.Matrix(m).rank()


@settings(max_examples=150, deadline=None)
@given(square())
def test_det_matches_sympy(m):
    assert la.det(la.to_matrix(m)) == Fraction(int(sp.Matrix(m).det()))


@settings(max_examples=50, deadline=None)
@given(square(), st.integers(1, 5))
def test_det_with_fractions(m, den):
    a = [[Fraction(x, den) for x in r] for r in m]
    expected = sp.Matrix([[sp.Rational(x, den) for x in r] for r in m]).det()
    assert la.det(a) == Fraction(int(sp.numer(expected)), int(sp.denom(expected)))


@settings(max_examples=80, deadline=None)
@given(square(st.integers(1, 4)))
def test_charpoly_matches_sympy(m):
    x = sp.symbols("x")
    coeffs = sp.Poly(sp.Matrix(m).charpoly(x).as_expr(), x).all_coeffs()[::-1]
    assert la.charpoly(la.to_matrix(m)) == [Fraction(int(c)) for c in coeffs]


@settings(max_examples=60, deadline=None)
@given(square(st.integers(1, 4)))
def test_minpoly_annihilates_and_divides_charpoly(m):
    a = la.to_matrix(m)
    q = la.minpoly(a)
    assert q[-1] == 1
    assert la.is_zero_matrix(la.poly_of_matrix(q, a))
    x = sp.symbols("x")
    cp = sp.Poly(list(reversed(la.charpoly(a))), x, domain="QQ")
    mp = sp.Poly(list(reversed(q)), x, domain="QQ")
    assert cp.rem(mp).is_zero
    # I, A, ..., A^(deg-1) are independent, so nothing of lower degree annihilates
    powers = [la.identity(len(a))]
    for _ in range(len(q) - 2):
        powers.append(la.matmul(a, powers[-1]))
    flat = [[p[r][c] for p in powers] for r in range(len(a)) for c in range(len(a))]
    assert la.rank(flat) == len(q) - 1


@settings(max_examples=80, deadline=None)
@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve_consistency(m, x0):
    a = la.to_matrix(m)
    x0 = [Fraction(v) for v in x0[: len(a[0])]]
    b = la.matvec(a, x0)
    x = la.solve(a, b)
    assert x is not None and la.matvec(a, x) == b


def test_solve_inconsistent():
    assert la.solve(la.to_matrix([[1, 1], [1, 1]]), [Fraction(1), Fraction(2)]) is None


def test_nullspace_dimension():
    a = la.to_matrix([[1, 2, 3], [2, 4, 6]])
    ns = la.nullspace(a)
    assert len(ns) == 2
    assert all(la.matvec(a, v) == [0, 0] for v in ns)


def test_empty_conventions():
    assert la.rank([]) == 0
    assert la.det([]) == 1
    assert la.charpoly([]) == [1]
    assert la.minpoly([]) == [1]


def test_independent_columns_are_leftmost():
    a = la.to_matrix([[1, 2, 0, 1], [0, 0, 1, 1]])
    assert la.independent_columns(a) == [0, 2]
