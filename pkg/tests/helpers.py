"""Shared test fixtures: the series suite and a random well-typed word generator."""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb, factorial

from thinflat.poly import Poly2
from thinflat.series import RationalForm, geometric

MAX_WIDTH = 4


def suite() -> dict[str, RationalForm]:
    return {
        "ones": geometric(1, 1, 1),
        "rec1_2_3_5": geometric(5, 2, 3),
        "t2": RationalForm.make(Poly2.monomial(0, 1)),
        "mixed": RationalForm.make(Poly2({(0, 0): 1, (1, 1): 1}), (1, 0, -1), (1, -1)),
    }


# frozen from tests/oracles/state_dim_oracle.py (sympy, permutation formula)
STATE_DIMS = {
    "ones": [1, 1, 1, 1],
    "rec1_2_3_5": [1, 1, 3, 13],
    "t2": [1, 2, 6, 22],
    "mixed": [1, 3, 13, 75],
}


def census(n: int, weight: int = 1) -> int:
    """Sum over set partitions of an n-set of prod(|block|! * weight).

    Recurrence on the block containing the first element; independent of
    any enumeration.
    """
    a = [1]
    for k in range(1, n + 1):
        a.append(sum(comb(k - 1, s - 1) * factorial(s) * weight * a[k - s] for s in range(1, k + 1)))
    return a[n]


_FROM = {
    0: ["iota", "S({l},{g})", "id(0)"],
    1: ["eps", "b1", "b2", "b3", "delta", "id(1)"],
    2: ["mu", "perm", "id(2)"],
}
_TARGET = {"iota": 1, "eps": 0, "mu": 1, "delta": 2, "perm": 2, "b1": 1, "b2": 1, "b3": 1}


def _atom(rng: random.Random, n: int) -> tuple[str, int]:
    if n > 2 or (n > 0 and rng.random() < 0.3):
        k = rng.randint(1, min(2, n))
        if k < n:
            a, ta = _atom(rng, k)
            b, tb = _atom(rng, n - k)
            if ta + tb <= MAX_WIDTH:
                return f"({a} @ {b})", ta + tb
        if n > 2:
            return f"(mu @ id({n - 2}))", n - 1
    choice = rng.choice(_FROM[n])
    if choice.startswith("S"):
        return choice.format(l=rng.randint(0, 2), g=rng.randint(0, 2)), 0
    if choice.startswith("id"):
        return choice, n
    t = _TARGET[choice]
    if n == 0 and rng.random() < 0.5:
        return f"({choice} @ iota)", t + 1
    return choice, t


def random_word(rng: random.Random, n: int, depth: int) -> tuple[str, int]:
    """A well-typed word with source ``n``; returns ``(text, target)``."""
    if depth <= 1:
        return _atom(rng, n)
    d1 = rng.randint(1, depth - 1)
    first, t = random_word(rng, n, d1)
    if rng.random() < 0.35:
        return first, t
    second, t2 = random_word(rng, t, depth - d1)
    return f"({first} ; {second})", t2


def adapter(t: int, n: int) -> str:
    """A fixed word ``t -> n`` used to close random words into endomorphisms."""
    steps = []
    while t > n:
        steps.append("(mu @ id(%d))" % (t - 2) if t > 2 else "mu" if t == 2 else "eps")
        t -= 1
    while t < n:
        steps.append("(iota @ id(%d))" % t)
        t += 1
    return " ; ".join(steps) if steps else "id(%d)" % n


def random_endo(rng: random.Random, n: int, depth: int) -> str:
    w, t = random_word(rng, n, depth)
    return f"({w}) ; ({adapter(t, n)})"


def random_map(rng: random.Random, n: int, m: int, depth: int) -> str:
    w, t = random_word(rng, n, depth)
    return f"({w}) ; ({adapter(t, m)})"


def random_series(rng: random.Random) -> RationalForm:
    """Small random rational form with integer coefficients."""
    P = Poly2({(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-3, 3) for _ in range(rng.randint(1, 3))})
    q1 = [1] + [rng.randint(-2, 2) for _ in range(rng.randint(0, 2))]
    q2 = [1] + [rng.randint(-2, 2) for _ in range(rng.randint(0, 2))]
    return RationalForm.make(P, q1, q2)


def random_t2_series(rng: random.Random) -> RationalForm:
    P = Poly2({(0, rng.randint(0, 2)): rng.randint(-3, 3) for _ in range(rng.randint(1, 2))})
    q2 = [1] + [rng.randint(-2, 2) for _ in range(rng.randint(0, 2))]
    return RationalForm.make(P, [1], q2)


def frac(x) -> Fraction:
    return Fraction(x)
