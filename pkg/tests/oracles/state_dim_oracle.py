"""Brute-force state-space dimensions, independent of the package.

A minimal 0 -> n surface is a set partition of {1..n} with a permutation per
block (its cycles are the boundary circles).  Pairing x with the mirror of y
closes up into circles given by the cycles of sigma_x o sigma_y^-1; merged
components come from a union-find over blocks.  Coefficients are expanded by
sympy and ranks are taken by sympy, so nothing here touches thinflat.

Run: python3 tests/oracles/state_dim_oracle.py
"""

import itertools

import sympy as sp

T1, T2 = sp.symbols("T1 T2")

SUITE = {
    "ones": 1 / ((1 - T1) * (1 - T2)),
    "rec1_2_3_5": 5 / ((1 - 2 * T1) * (1 - 3 * T2)),
    "t2": T2,
    "mixed": (1 + T1 * T2) / ((1 - T1**2) * (1 - T2)),
}
# Largest hole and genus exponents needed: with a = max(0, deg P - deg Q + 1)
# the recurrence puts T^a * reversed(Q) in the ideal, so exponents below
# a + deg Q span every decorated component.
SPAN = {"ones": (0, 0), "rec1_2_3_5": (0, 0), "t2": (0, 1), "mixed": (1, 1)}


def coefficients(expr, L, G):
    s = sp.series(expr, T1, 0, L + 1).removeO()
    out = {}
    for l in range(L + 1):
        c = sp.expand(s.coeff(T1, l))
        c = sp.series(c, T2, 0, G + 1).removeO()
        for g in range(G + 1):
            out[(l, g)] = sp.Rational(sp.expand(c).coeff(T2, g))
    return out


def partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in partitions(rest):
        yield [[first]] + p
        for k in range(len(p)):
            yield p[:k] + [[first] + p[k]] + p[k + 1 :]


def minimal_states(n):
    for part in partitions(list(range(1, n + 1))):
        for images in itertools.product(*[itertools.permutations(b) for b in part]):
            sigma = {}
            for block, image in zip(part, images):
                sigma.update(zip(block, image))
            yield [frozenset(b) for b in part], sigma


def ncycles(perm, subset):
    seen, count = set(), 0
    for s in subset:
        if s in seen:
            continue
        count += 1
        t = s
        while t not in seen:
            seen.add(t)
            t = perm[t]
    return count


def block_cycles(sigma, block):
    return ncycles(sigma, block)


def pair(x, y, alpha):
    (bx, sx, dx), (by, sy, dy) = x, y
    inv_y = {v: k for k, v in sy.items()}
    rho = {t: sx[inv_y[t]] for t in sx}
    nodes = [("x", i) for i in range(len(bx))] + [("y", i) for i in range(len(by))]
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    owner_x = {t: i for i, b in enumerate(bx) for t in b}
    owner_y = {t: i for i, b in enumerate(by) for t in b}
    for t in owner_x:
        a, b = find(("x", owner_x[t])), find(("y", owner_y[t]))
        if a != b:
            parent[b] = a
    value = sp.Rational(1)
    for root in {find(v) for v in nodes}:
        members = [v for v in nodes if find(v) == root]
        toks, chi, holes = set(), 0, 0
        for side, i in members:
            block, sigma, (h, g) = (bx[i], sx, dx[i]) if side == "x" else (by[i], sy, dy[i])
            toks |= block
            chi += 2 - block_cycles(sigma, block) - h - 2 * g
            holes += h
        chi -= len(toks)
        b = ncycles(rho, toks) + holes
        twice_g = 2 - chi - b
        assert twice_g >= 0 and twice_g % 2 == 0
        value *= alpha[(b - 1, twice_g // 2)]
    return value


def state_dim(name, n):
    hmax, gmax = SPAN[name]
    alpha = coefficients(SUITE[name], 2 * n + 2 * hmax + 2, 2 * n + 2 * gmax + 2)
    if all(v == 0 for v in alpha.values()):
        return 0
    states = []
    for blocks, sigma in minimal_states(n):
        for dec in itertools.product(
            [(h, g) for h in range(hmax + 1) for g in range(gmax + 1)], repeat=len(blocks)
        ):
            states.append((blocks, sigma, dec))
    if n == 0:
        return 1
    gram = sp.Matrix([[pair(x, y, alpha) for y in states] for x in states])
    return gram.rank()


if __name__ == "__main__":
    for name in SUITE:
        print(name, [state_dim(name, n) for n in range(4)])
