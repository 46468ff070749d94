"""Sparse polynomials in ``T1, T2`` with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exp = tuple[int, int]


class Poly2:
    """Immutable bivariate polynomial stored as ``{(i, j): coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, object] | Iterable[tuple[Exp, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exp, Fraction] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            acc[(i, j)] = acc.get((i, j), Fraction(0)) + Fraction(c)
        self._terms = {k: v for k, v in sorted(acc.items()) if v != 0}
        self._hash = None

    # -- construction -------------------------------------------------------
    @classmethod
    def const(cls, c) -> "Poly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "Poly2":
        return cls({(i, j): c})

    @classmethod
    def in_t1(cls, coeffs: Sequence) -> "Poly2":
        return cls({(k, 0): c for k, c in enumerate(coeffs)})

    @classmethod
    def in_t2(cls, coeffs: Sequence) -> "Poly2":
        return cls({(0, k): c for k, c in enumerate(coeffs)})

    # -- access -------------------------------------------------------------
    @property
    def terms(self) -> dict[Exp, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, exp: Exp) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def deg1(self) -> int:
        """Degree in ``T1`` (``-1`` for the zero polynomial)."""
        return max((i for i, _ in self._terms), default=-1)

    @property
    def deg2(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def t1_coeffs(self) -> list[Fraction]:
        """Coefficients of a polynomial in ``T1`` alone."""
        if any(j for _, j in self._terms):
            raise ValueError("polynomial involves T2")
        return [self[(k, 0)] for k in range(self.deg1 + 1)]

    def t2_coeffs(self) -> list[Fraction]:
        if any(i for i, _ in self._terms):
            raise ValueError("polynomial involves T1")
        return [self[(0, k)] for k in range(self.deg2 + 1)]

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other) -> "Poly2":
        other = _coerce(other)
        return Poly2(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "Poly2":
        return Poly2({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> "Poly2":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Poly2":
        return _coerce(other) - self

    def __mul__(self, other) -> "Poly2":
        other = _coerce(other)
        out: dict[Exp, Fraction] = {}
        for (a, b), x in self._terms.items():
            for (c, d), y in other._terms.items():
                k = (a + c, b + d)
                out[k] = out.get(k, Fraction(0)) + x * y
        return Poly2(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly2":
        out = Poly2.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly2.const(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def truncate(self, n1: int, n2: int) -> "Poly2":
        """Keep terms with ``i < n1`` and ``j < n2``."""
        return Poly2({(i, j): c for (i, j), c in self._terms.items() if i < n1 and j < n2})

    def at_t1_zero(self) -> "Poly2":
        return Poly2({(0, j): c for (i, j), c in self._terms.items() if i == 0})

    def divide_t1(self) -> "Poly2":
        """Exact division by ``T1``."""
        if any(i == 0 for i, _ in self._terms):
            raise ArithmeticError("T1 does not divide the polynomial")
        return Poly2({(i - 1, j): c for (i, j), c in self._terms.items()})

    def __repr__(self) -> str:
        return f"Poly2({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self._terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0])):
            mono = "*".join(
                x for x in (_pow("T1", i), _pow("T2", j)) if x
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _pow(v: str, k: int) -> str:
    return "" if k == 0 else v if k == 1 else f"{v}^{k}"


def _coerce(x) -> Poly2:
    if isinstance(x, Poly2):
        return x
    return Poly2.const(x)


def strip(coeffs: Sequence) -> tuple[Fraction, ...]:
    """Drop trailing zero coefficients of a univariate polynomial."""
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def upoly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return strip(out)


def upoly_str(coeffs: Sequence[Fraction], var: str = "T") -> str:
    return str(Poly2.in_t1(coeffs)).replace("T1", var)
