"""Thin flat surfaces as morphisms ``n -> m``.

A cobordism is stored combinatorially.  Each viewable (connected, touching the
horizontal boundary) component records its genus, its number of holes
(boundary circles carrying no horizontal interval), and its boundary cycles:
cyclic sequences of interval tokens read along the oriented boundary.  Bottom
tokens are traversed left to right and top tokens right to left, so a strip
``id(1)`` has the single cycle ``(B1, T1)``.  Floating components carry only
``(ell, genus)`` with ``ell + 1`` boundary circles.

Gluing is a pure graph walk.  Write ``next`` for the cyclic successor of a
token in its boundary cycle and ``partner`` for the token it is glued to.  The
new boundary circles are the orbits of ``t -> next(partner(t))`` (with
``partner(t) = t`` for unglued tokens); glued tokens are erased from the
orbits, and an orbit made only of glued tokens becomes a hole.  Genus is never
carried through a gluing: it is recomputed from the Euler characteristic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterable, NamedTuple, Sequence


class CobordismError(ValueError):
    """Malformed cobordism or incompatible arities."""


class SpliceError(RuntimeError):
    """Inconsistent Euler characteristic after a gluing; signals a splice bug."""


class Token(NamedTuple):
    side: str  # "B" (source) or "T" (target)
    index: int

    def __str__(self) -> str:
        return f"{self.side}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Token":
        if len(text) < 2 or text[0] not in "BT" or not text[1:].isdigit():
            raise CobordismError(f"bad token {text!r}")
        return cls(text[0], int(text[1:]))


def B(i: int) -> Token:
    return Token("B", i)


def T(j: int) -> Token:
    return Token("T", j)


Cycle = tuple[Token, ...]


def rotate_cycle(cycle: Sequence[Token]) -> Cycle:
    """Rotate a cycle so that its least token comes first."""
    k = min(range(len(cycle)), key=cycle.__getitem__)
    return tuple(cycle[k:]) + tuple(cycle[:k])


@dataclass(frozen=True, order=True)
class FloatingComponent:
    """Closed connected surface with ``ell + 1`` boundary circles and genus ``genus``."""

    ell: int
    genus: int

    def __post_init__(self):
        if self.ell < 0 or self.genus < 0:
            raise CobordismError("floating component needs ell, genus >= 0")

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus - (self.ell + 1)


@dataclass(frozen=True)
class ViewableComponent:
    genus: int
    holes: int
    cycles: tuple[Cycle, ...]

    def __post_init__(self):
        if self.genus < 0 or self.holes < 0:
            raise CobordismError("genus and holes must be nonnegative")
        if not self.cycles or any(not c for c in self.cycles):
            raise CobordismError("a viewable component needs nonempty boundary cycles")
        toks = [t for c in self.cycles for t in c]
        if len(set(toks)) != len(toks):
            raise CobordismError("repeated token inside a component")

    @property
    def tokens(self) -> tuple[Token, ...]:
        return tuple(sorted(t for c in self.cycles for t in c))

    @property
    def circles(self) -> int:
        return len(self.cycles) + self.holes

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus - self.circles

    def canonical(self) -> "ViewableComponent":
        cycles = tuple(sorted(rotate_cycle(c) for c in self.cycles))
        return ViewableComponent(self.genus, self.holes, cycles)

    def sort_key(self):
        return (self.tokens, self.genus, self.holes, self.cycles)

    def is_minimal(self) -> bool:
        return self.genus == 0 and self.holes == 0


@dataclass(frozen=True)
class Cobordism:
    """A morphism ``n -> m``: viewable components plus a floating multiset.

    Instances produced by this module are always canonical, so ``==`` is
    equality of morphisms.  Use :func:`canonicalize` on hand-built values.
    """

    n: int
    m: int
    viewable: tuple[ViewableComponent, ...] = ()
    floating: tuple[FloatingComponent, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise CobordismError("arities must be nonnegative")

    @property
    def arity(self) -> tuple[int, int]:
        return self.n, self.m

    @property
    def is_viewable(self) -> bool:
        return not self.floating

    def floating_counts(self) -> Counter:
        return Counter(self.floating)

    def sort_key(self):
        return (tuple(c.sort_key() for c in self.viewable), self.floating)

    def __str__(self) -> str:  # pragma: no cover - convenience
        from .parser import format_cobordism

        return format_cobordism(self)


CanonicalCobordism = Cobordism


def canonicalize(f: Cobordism) -> Cobordism:
    """Validate ``f`` and return its deterministic normal form."""
    seen: list[Token] = []
    for comp in f.viewable:
        seen.extend(comp.tokens)
    expected = [B(i) for i in range(1, f.n + 1)] + [T(j) for j in range(1, f.m + 1)]
    if sorted(seen) != expected:
        raise CobordismError(
            f"tokens {sorted(map(str, seen))} do not match arity {f.n}->{f.m}"
        )
    comps = sorted((c.canonical() for c in f.viewable), key=ViewableComponent.sort_key)
    return Cobordism(f.n, f.m, tuple(comps), tuple(sorted(f.floating)))


def make_cobordism(
    n: int,
    m: int,
    viewable: Iterable[tuple[int, int, Iterable[Iterable[Token | str]]]] = (),
    floating: Iterable[tuple[int, int]] = (),
) -> Cobordism:
    """Build a canonical cobordism from ``(genus, holes, cycles)`` triples."""
    comps = []
    for genus, holes, cycles in viewable:
        cyc = tuple(
            tuple(Token.parse(t) if isinstance(t, str) else Token(*t) for t in c) for c in cycles
        )
        comps.append(ViewableComponent(genus, holes, cyc))
    fl = tuple(FloatingComponent(ell, g) for ell, g in floating)
    return canonicalize(Cobordism(n, m, tuple(comps), fl))


# -- generators ---------------------------------------------------------------

def identity(n: int) -> Cobordism:
    if n < 0:
        raise CobordismError("id(n) needs n >= 0")
    return make_cobordism(n, n, [(0, 0, [(B(i), T(i))]) for i in range(1, n + 1)])


def floating_surface(ell: int, genus: int) -> Cobordism:
    return Cobordism(0, 0, (), (FloatingComponent(ell, genus),))


_GENERATORS = {
    "iota": lambda: make_cobordism(0, 1, [(0, 0, [("T1",)])]),
    "eps": lambda: make_cobordism(1, 0, [(0, 0, [("B1",)])]),
    "mu": lambda: make_cobordism(2, 1, [(0, 0, [("T1", "B1", "B2")])]),
    "delta": lambda: reflect(_GENERATORS["mu"]()),
    "perm": lambda: make_cobordism(2, 2, [(0, 0, [("B1", "T2")]), (0, 0, [("B2", "T1")])]),
    "b1": lambda: make_cobordism(1, 1, [(0, 1, [("B1", "T1")])]),
    "b2": lambda: make_cobordism(1, 1, [(1, 0, [("B1", "T1")])]),
    "b3": lambda: make_cobordism(1, 1, [(0, 0, [("B1",), ("T1",)])]),
}

GENERATOR_NAMES = tuple(_GENERATORS) + ("id", "S")


def make_generator(kind: str, *args: int) -> Cobordism:
    """Return a generating morphism.

    ``kind`` is one of ``iota, eps, mu, delta, perm, b1, b2, b3`` or ``id``
    (with one argument ``n``) or ``S`` (arguments ``ell, g``; a floating
    component with ``ell + 1`` circles).
    """
    if kind == "id":
        (n,) = args
        return identity(n)
    if kind == "S":
        ell, g = args
        return floating_surface(ell, g)
    if kind not in _GENERATORS or args:
        raise CobordismError(f"unknown generator {kind!r}{args or ''}")
    return _GENERATORS[kind]()


# -- monoidal structure -------------------------------------------------------

def _shift(tok: Token, db: int, dt: int) -> Token:
    return Token(tok.side, tok.index + (db if tok.side == "B" else dt))


def _shift_component(c: ViewableComponent, db: int, dt: int) -> ViewableComponent:
    return ViewableComponent(
        c.genus, c.holes, tuple(tuple(_shift(t, db, dt) for t in cyc) for cyc in c.cycles)
    )


def tensor(f: Cobordism, g: Cobordism) -> Cobordism:
    """Disjoint union, ``g`` placed to the right of ``f``."""
    comps = f.viewable + tuple(_shift_component(c, f.n, f.m) for c in g.viewable)
    return canonicalize(Cobordism(f.n + g.n, f.m + g.m, comps, f.floating + g.floating))


def tensor_all(fs: Iterable[Cobordism]) -> Cobordism:
    out = identity(0)
    for f in fs:
        out = tensor(out, f)
    return out


def reflect(f: Cobordism) -> Cobordism:
    """Mirror about a horizontal line: swap source/target, reverse cycles."""
    flip = {"B": "T", "T": "B"}
    comps = tuple(
        ViewableComponent(
            c.genus,
            c.holes,
            tuple(tuple(Token(flip[t.side], t.index) for t in reversed(cyc)) for cyc in c.cycles),
        )
        for c in f.viewable
    )
    return canonicalize(Cobordism(f.m, f.n, comps, f.floating))


# -- gluing -------------------------------------------------------------------

# A token occurrence during a gluing is (piece, token); piece 0 is the lower
# cobordism, piece 1 the upper one.
_Occ = tuple[int, Token]


@dataclass
class GlueResult:
    """Outcome of a gluing together with component provenance.

    ``origins[k]`` lists ``(piece, component_index)`` pairs of the input
    viewable components merged into output component ``k``; output
    components are the viewable ones first (in the order of
    ``cobordism.viewable``) followed by the newly created floating ones (in
    the order of ``new_floating``).
    """

    cobordism: Cobordism
    new_floating: tuple[FloatingComponent, ...]
    origins: list[list[tuple[int, int]]]


def _glue(
    pieces: Sequence[Cobordism],
    pairs: Sequence[tuple[_Occ, _Occ]],
    rename,
    n: int,
    m: int,
) -> GlueResult:
    """Glue token pairs among the viewable components of ``pieces``.

    ``rename`` maps a surviving occurrence to its token in the result.
    """
    comp_of: dict[_Occ, tuple[int, int]] = {}
    succ: dict[_Occ, _Occ] = {}
    comps: list[tuple[int, int]] = []
    for p, piece in enumerate(pieces):
        for ci, comp in enumerate(piece.viewable):
            comps.append((p, ci))
            for cyc in comp.cycles:
                for k, tok in enumerate(cyc):
                    occ = (p, tok)
                    comp_of[occ] = (p, ci)
                    succ[occ] = (p, cyc[(k + 1) % len(cyc)])

    partner: dict[_Occ, _Occ] = {}
    for a, b in pairs:
        partner[a] = b
        partner[b] = a

    # union-find over components
    parent = {c: c for c in comps}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for a, b in pairs:
        ra, rb = find(comp_of[a]), find(comp_of[b])
        if ra != rb:
            parent[rb] = ra

    euler: dict = Counter()
    holes: dict = Counter()
    members: dict = {}
    for c in comps:
        p, ci = c
        comp = pieces[p].viewable[ci]
        r = find(c)
        euler[r] += comp.euler
        holes[r] += comp.holes
        members.setdefault(r, []).append(c)
    for a, _ in pairs:
        euler[find(comp_of[a])] -= 1

    cycles: dict = {}
    visited: set[_Occ] = set()
    for start in comp_of:  # dict order is deterministic
        if start in visited:
            continue
        orbit = []
        t = start
        while t not in visited:
            visited.add(t)
            orbit.append(t)
            t = succ[partner.get(t, t)]
        if t != start:
            raise SpliceError("boundary walk did not close up")
        r = find(comp_of[start])
        kept = tuple(rename(o) for o in orbit if o not in partner)
        if kept:
            cycles.setdefault(r, []).append(kept)
        else:
            holes[r] += 1

    viewable: list[tuple[ViewableComponent, list]] = []
    floating: list[tuple[FloatingComponent, list]] = []
    for r in members:  # insertion order follows comps
        cyc = cycles.get(r, [])
        b = len(cyc) + holes[r]
        twice_genus = 2 - euler[r] - b
        if twice_genus < 0 or twice_genus % 2:
            raise SpliceError(
                f"merged component has chi={euler[r]}, {b} circles: 2-chi-b={twice_genus}"
            )
        genus = twice_genus // 2
        if cyc:
            viewable.append((ViewableComponent(genus, holes[r], tuple(cyc)).canonical(), members[r]))
        else:
            floating.append((FloatingComponent(b - 1, genus), members[r]))

    viewable.sort(key=lambda item: item[0].sort_key())
    old_floating = tuple(fc for piece in pieces for fc in piece.floating)
    new_floating = tuple(fc for fc, _ in floating)
    result = Cobordism(
        n, m, tuple(c for c, _ in viewable), tuple(sorted(old_floating + new_floating))
    )
    origins = [o for _, o in viewable] + [o for _, o in floating]
    return GlueResult(result, new_floating, origins)


def glue_vertical(g: Cobordism, f: Cobordism) -> GlueResult:
    """``g o f`` with provenance (piece 0 is ``f``, piece 1 is ``g``)."""
    if f.m != g.n:
        raise CobordismError(f"cannot compose {g.n}->{g.m} after {f.n}->{f.m}")
    pairs = [((0, T(j)), (1, B(j))) for j in range(1, f.m + 1)]

    def rename(occ: _Occ) -> Token:
        return occ[1]

    return _glue((f, g), pairs, rename, f.n, g.m)


def compose(g: Cobordism, f: Cobordism) -> Cobordism:
    """``g o f``: stack ``g`` on top of ``f``."""
    return glue_vertical(g, f).cobordism


def compose_all(*fs: Cobordism) -> Cobordism:
    """``compose_all(h, g, f) = h o g o f``."""
    out = fs[-1]
    for g in reversed(fs[:-1]):
        out = compose(g, out)
    return out


def glue_closure(x: Cobordism) -> GlueResult:
    if x.n != x.m:
        raise CobordismError(f"close_up needs an endomorphism, got {x.n}->{x.m}")
    pairs = [((0, T(i)), (0, B(i))) for i in range(1, x.n + 1)]
    return _glue((x,), pairs, lambda occ: occ[1], 0, 0)


def glue_pair_closure(z: Cobordism, v: Cobordism) -> GlueResult:
    """Close ``z o v`` for ``v: n -> m``, ``z: m -> n`` with provenance.

    Piece 0 is ``v`` and piece 1 is ``z``; every output component is floating.
    """
    if v.m != z.n or z.m != v.n:
        raise CobordismError(f"cannot close {z.n}->{z.m} against {v.n}->{v.m}")
    pairs = [((0, T(j)), (1, B(j))) for j in range(1, v.m + 1)]
    pairs += [((1, T(i)), (0, B(i))) for i in range(1, v.n + 1)]
    return _glue((v, z), pairs, lambda occ: occ[1], 0, 0)


def close_up(x: Cobordism) -> tuple[FloatingComponent, ...]:
    """Close an endomorphism by gluing ``T(i)`` to ``B(i)``; return all floating parts."""
    return glue_closure(x).cobordism.floating


def power(x: Cobordism, k: int) -> Cobordism:
    out = identity(x.n)
    for _ in range(k):
        out = compose(x, out)
    return out


# -- minimal factorization --------------------------------------------------

def split_minimal(
    f: Cobordism,
) -> tuple[Cobordism, tuple[tuple[int, int], ...], tuple[FloatingComponent, ...]]:
    """Strip holes and genus from every viewable component.

    Returns ``(minimal, exponents, floating)`` where ``exponents[k]`` is the
    ``(holes, genus)`` pair removed from the ``k``-th viewable component.
    """
    exps = tuple((c.holes, c.genus) for c in f.viewable)
    comps = tuple(ViewableComponent(0, 0, c.cycles) for c in f.viewable)
    return Cobordism(f.n, f.m, comps, ()), exps, f.floating


def decorate_fields(y: Cobordism, decoration: Sequence[tuple[int, int]]) -> Cobordism:
    """Add ``(holes, genus)`` to each viewable component by editing fields."""
    if len(decoration) != len(y.viewable):
        raise CobordismError("decoration length must match the number of components")
    comps = tuple(
        replace(c, holes=c.holes + i, genus=c.genus + j) for c, (i, j) in zip(y.viewable, decoration)
    )
    return Cobordism(y.n, y.m, comps, y.floating)


def coupon(i: int, j: int) -> Cobordism:
    """The endomorphism ``b1^i b2^j`` of ``1``."""
    return compose(power(make_generator("b1"), i), power(make_generator("b2"), j))


def insert_coupon(y: Cobordism, tok: Token, i: int, j: int) -> Cobordism:
    """Compose ``b1^i b2^j`` onto the horizontal leg ``tok`` of ``y``."""
    if (i, j) == (0, 0):
        return y
    c = coupon(i, j)
    if tok.side == "T":
        k = tok.index
        return compose(tensor_all([identity(k - 1), c, identity(y.m - k)]), y)
    k = tok.index
    return compose(y, tensor_all([identity(k - 1), c, identity(y.n - k)]))


def decorate(y: Cobordism, decoration: Sequence[tuple[int, int]]) -> Cobordism:
    """Realize a decoration by coupon insertion at each component's least token."""
    if len(decoration) != len(y.viewable):
        raise CobordismError("decoration length must match the number of components")
    legs = [c.tokens[0] for c in y.viewable]
    out = y
    for tok, (i, j) in zip(legs, decoration):
        out = insert_coupon(out, tok, i, j)
    return out
