"""Exact linear algebra over the rationals.

Matrices are plain lists of lists of :class:`fractions.Fraction` (or ints).
Nothing here ever touches floating point: rank decisions are discontinuous,
so every routine works with exact arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [Fraction(0)] * cols
        for k in range(inner):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += x * bk[j]
        out.append(acc)
    return out


def matvec(a: Matrix, v: Sequence[Fraction]) -> Vector:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(u, v) if x and y), Fraction(0))


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def _integer_rows(a: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators so Bareiss runs on ints."""
    out = []
    for row in a:
        den = 1
        for x in row:
            x = Fraction(x)
            den = den * x.denominator // _gcd(den, x.denominator)
        out.append([int(Fraction(x) * den) for x in row])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _bareiss(rows: list[list[int]]) -> tuple[int, int]:
    """Fraction-free elimination in place.

    Returns ``(rank, sign)`` where ``sign`` tracks row swaps.  For a square
    full-rank input the last pivot is the determinant (times ``sign``).
    """
    n = len(rows)
    if n == 0:
        return 0, 1
    m = len(rows[0])
    prev = 1
    rank = 0
    sign = 1
    for col in range(m):
        if rank == n:
            break
        pivot = None
        for r in range(rank, n):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            sign = -sign
        p = rows[rank][col]
        for r in range(rank + 1, n):
            rr = rows[r]
            f = rr[col]
            pr = rows[rank]
            for c in range(col + 1, m):
                rr[c] = (p * rr[c] - f * pr[c]) // prev
            rr[col] = 0
        prev = p
        rank += 1
    return rank, sign


def rank(a: Sequence[Sequence[Fraction]]) -> int:
    """Rank via fraction-free (Bareiss) Gaussian elimination."""
    if not a or not a[0]:
        return 0
    r, _ = _bareiss(_integer_rows(a))
    return r


def det(a: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(a)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    scale = Fraction(1)
    for row in a:
        den = 1
        for x in row:
            x = Fraction(x)
            den = den * x.denominator // _gcd(den, x.denominator)
        scale *= den
    rows = _integer_rows(a)
    r, sign = _bareiss(rows)
    if r < n:
        return Fraction(0)
    return Fraction(sign * rows[n - 1][n - 1]) / scale


def rref(a: Sequence[Sequence[Fraction]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [list(map(Fraction, row)) for row in a]
    pivots: list[int] = []
    if not m:
        return m, pivots
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                mr = m[r]
                m[i] = [x - f * y for x, y in zip(m[i], mr)]
        pivots.append(c)
        r += 1
    return m, pivots


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Vector | None:
    """One exact solution of ``a x = b`` (free variables set to zero), or None."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [Fraction(y)] for row, y in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(red, pivots):
        x[c] = row[ncols]
    return x


def nullspace(a: Sequence[Sequence[Fraction]], ncols: int | None = None) -> list[Vector]:
    if ncols is None:
        ncols = len(a[0]) if a else 0
    if not a:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        basis.append(v)
    return basis


def independent_columns(a: Sequence[Sequence[Fraction]]) -> list[int]:
    """Greedy (leftmost-first) maximal set of linearly independent columns."""
    if not a:
        return []
    _, pivots = rref(a)
    return pivots


def charpoly(a: Matrix) -> list[Fraction]:
    """Characteristic polynomial det(xI - a), coefficients low degree first.

    Faddeev-LeVerrier; exact over Q since only integer divisions occur.
    """
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = identity(n)
    c = Fraction(1)
    for k in range(1, n + 1):
        am = matmul(a, mk)
        c = -sum((am[i][i] for i in range(n)), Fraction(0)) / k
        coeffs[n - k] = c
        mk = [[am[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    return coeffs


def minpoly(a: Matrix) -> list[Fraction]:
    """Monic minimal polynomial of a square matrix, low degree first."""
    n = len(a)
    if n == 0:
        return [Fraction(1)]
    powers = [identity(n)]
    while True:
        k = len(powers) - 1
        # columns are the flattened powers A^0..A^k
        flat = [[powers[j][r][c] for j in range(k + 1)] for r in range(n) for c in range(n)]
        ns = nullspace(flat, k + 1)
        if ns:
            v = ns[0]
            lead = v[k]
            if lead == 0:  # pragma: no cover - earlier k would have failed
                raise ArithmeticError("minimal polynomial search lost its leading term")
            return [x / lead for x in v]
        powers.append(matmul(a, powers[-1]))


def poly_of_matrix(coeffs: Sequence[Fraction], a: Matrix) -> Matrix:
    n = len(a)
    out = zeros(n)
    p = identity(n)
    for c in coeffs:
        if c:
            out = [[x + c * y for x, y in zip(ro, rp)] for ro, rp in zip(out, p)]
        p = matmul(a, p)
    return out


def span_rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    return rank(vectors) if vectors else 0
