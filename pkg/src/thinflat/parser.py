"""A small morphism language for thin flat surfaces.

Grammar (whitespace-insensitive, identifiers case-sensitive)::

    expr  := cterm
    cterm := tterm (";" tterm)*        a ; b  means  b o a
    tterm := atom ("@" atom)*          tensor, binds tighter than ";"
    atom  := iota | eps | mu | delta | perm | b1 | b2 | b3
           | id "(" nat ")" | S "(" nat "," nat ")" | "(" expr ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import cobordism as cb


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.line, self.col = _line_col(text, pos)
        self.pos = pos
        self.reason = message
        super().__init__(f"{self.line}:{self.col}: {message}")


class ArityError(ValueError):
    def __init__(self, message: str, span: tuple[int, int], text: str | None = None):
        self.span = span
        self.line, self.col = 1, span[0] + 1
        self.reason = message
        if text is not None:
            self.line, self.col = _line_col(text, span[0])
            self.reason = f"{message} in {text[span[0] : span[1]]!r}"
            message = f"{self.line}:{self.col}: {self.reason}"
        super().__init__(message)


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


@dataclass(frozen=True)
class Gen:
    kind: str
    args: tuple[int, ...]
    span: tuple[int, int]


@dataclass(frozen=True)
class Tensor:
    left: "Expr"
    right: "Expr"
    span: tuple[int, int]


@dataclass(frozen=True)
class Compose:
    """Diagrammatic composition: ``first`` is applied before ``second``."""

    first: "Expr"
    second: "Expr"
    span: tuple[int, int]


Expr = Gen | Tensor | Compose

_SIMPLE = {"iota", "eps", "mu", "delta", "perm", "b1", "b2", "b3"}
_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<nat>\d+)|(?P<op>[;@(),]))")


def _tokenize(text: str) -> list[tuple[str, str, int, int]]:
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        mt = _TOKEN.match(text, pos)
        if mt is None or mt.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = mt.lastgroup
        out.append((kind, mt.group(kind), mt.start(kind), mt.end()))
        pos = mt.end()
    out.append(("eof", "", len(text), len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self) -> Expr:
        e = self.cterm()
        tok = self.peek()
        if tok[0] != "eof":
            raise ParseError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return e

    def cterm(self) -> Expr:
        e = self.tterm()
        while self.peek()[1] == ";" and self.peek()[0] == "op":
            self.take()
            rhs = self.tterm()
            e = Compose(e, rhs, (e.span[0], rhs.span[1]))
        return e

    def tterm(self) -> Expr:
        e = self.atom()
        while self.peek()[1] == "@" and self.peek()[0] == "op":
            self.take()
            rhs = self.atom()
            e = Tensor(e, rhs, (e.span[0], rhs.span[1]))
        return e

    def nat(self) -> int:
        return int(self.take("nat")[1])

    def atom(self) -> Expr:
        kind, value, start, end = self.peek()
        if kind == "op" and value == "(":
            self.take()
            e = self.cterm()
            close = self.take("op", ")")
            return _respan(e, (start, close[3]))
        if kind != "name":
            raise ParseError(f"expected a generator, got {value or 'end of input'!r}", self.text, start)
        self.take()
        if value in _SIMPLE:
            return Gen(value, (), (start, end))
        if value == "id":
            self.take("op", "(")
            n = self.nat()
            close = self.take("op", ")")
            return Gen("id", (n,), (start, close[3]))
        if value == "S":
            self.take("op", "(")
            ell = self.nat()
            self.take("op", ",")
            g = self.nat()
            close = self.take("op", ")")
            return Gen("S", (ell, g), (start, close[3]))
        raise ParseError(f"unknown generator {value!r}", self.text, start)


def _respan(e: Expr, span: tuple[int, int]) -> Expr:
    if isinstance(e, Gen):
        return Gen(e.kind, e.args, span)
    if isinstance(e, Tensor):
        return Tensor(e.left, e.right, span)
    return Compose(e.first, e.second, span)


def parse(text: str) -> Expr:
    """Parse a morphism word; raises :class:`ParseError` with ``line:col``."""
    return _Parser(text).parse()


_GEN_ARITY = {
    "iota": (0, 1),
    "eps": (1, 0),
    "mu": (2, 1),
    "delta": (1, 2),
    "perm": (2, 2),
    "b1": (1, 1),
    "b2": (1, 1),
    "b3": (1, 1),
}


def arity(e: Expr, text: str | None = None) -> tuple[int, int]:
    """Infer ``(source, target)``; raises :class:`ArityError` on mismatch."""
    if isinstance(e, Gen):
        if e.kind == "id":
            return e.args[0], e.args[0]
        if e.kind == "S":
            return 0, 0
        return _GEN_ARITY[e.kind]
    if isinstance(e, Tensor):
        a, b = arity(e.left, text), arity(e.right, text)
        return a[0] + b[0], a[1] + b[1]
    a, b = arity(e.first, text), arity(e.second, text)
    if a[1] != b[0]:
        raise ArityError(
            f"arity mismatch: target {a[1]} of the first factor, source {b[0]} of the second",
            e.span,
            text,
        )
    return a[0], b[1]


def elaborate(e: Expr | str) -> cb.Cobordism:
    """Fold an expression (or source text) into a canonical cobordism."""
    text = None
    if isinstance(e, str):
        text = e
        e = parse(e)
    arity(e, text)
    return _fold(e)


def _fold(e: Expr) -> cb.Cobordism:
    if isinstance(e, Gen):
        return cb.make_generator(e.kind, *e.args)
    if isinstance(e, Tensor):
        return cb.tensor(_fold(e.left), _fold(e.right))
    return cb.compose(_fold(e.second), _fold(e.first))


def compose_words(*words: str) -> str:
    """Join words diagrammatically, parenthesizing each."""
    return " ; ".join(f"({w})" for w in words)


def format_cobordism(f: cb.Cobordism) -> str:
    """Stable one-line rendering of canonical data (not a generator word)."""
    parts = []
    for c in f.viewable:
        cyc = "".join("(" + " ".join(map(str, cy)) + ")" for cy in c.cycles)
        parts.append(f"[g{c.genus} h{c.holes} {cyc}]")
    for fl in f.floating:
        parts.append(f"[float ell{fl.ell} g{fl.genus}]")
    return f"{f.n}→{f.m} " + ("".join(parts) if parts else "[]")


format = format_cobordism  # noqa: A001 - public name used by callers
