"""JSON encodings for cobordisms, series, tables, skein vectors and points.

Every rational is written as an exact string ``"n"`` or ``"n/d"``; output is
built from sorted data so identical inputs give byte-identical JSON.
"""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction

from . import cobordism as cb
from .cobordism import Cobordism, Token
from .hilbert import HilbertPoint
from .poly import Poly2
from .series import CoeffTable, RationalForm, SyntacticAlgebra
from .skein import SkeinBasisElement, SkeinVector


class FormatError(ValueError):
    pass


def rat(x) -> str:
    return str(Fraction(x))


def parse_rat(s) -> Fraction:
    if isinstance(s, bool):
        raise FormatError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"not a rational: {s!r}") from exc
    raise FormatError(f"rationals must be strings or integers, got {s!r}")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))


# -- cobordisms ---------------------------------------------------------------

def cobordism_to_json(f: Cobordism) -> dict:
    counts = Counter(f.floating)
    return {
        "n": f.n,
        "m": f.m,
        "viewable": [
            {"genus": c.genus, "holes": c.holes, "cycles": [[str(t) for t in cy] for cy in c.cycles]}
            for c in f.viewable
        ],
        "floating": [
            {"ell": fc.ell, "genus": fc.genus, "mult": counts[fc]} for fc in sorted(counts)
        ],
    }


def cobordism_from_json(d: dict) -> Cobordism:
    try:
        comps = [
            (c["genus"], c.get("holes", 0), [[Token.parse(t) for t in cy] for cy in c["cycles"]])
            for c in d.get("viewable", [])
        ]
        floating = []
        for fl in d.get("floating", []):
            floating += [(int(fl["ell"]), int(fl["genus"]))] * int(fl.get("mult", 1))
        return cb.make_cobordism(d["n"], d["m"], comps, floating)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed cobordism JSON: {exc}") from exc


# -- series -----------------------------------------------------------------------

def series_to_json(z: RationalForm) -> dict:
    return {
        "P": [[i, j, rat(c)] for (i, j), c in z.P.items()],
        "Q1": [[str(k), rat(c)] for k, c in enumerate(z.Q1) if c],
        "Q2": [[str(k), rat(c)] for k, c in enumerate(z.Q2) if c],
    }


def _upoly(entries) -> list[Fraction]:
    acc: dict[int, Fraction] = {}
    for k, c in entries:
        k = int(k)
        if k < 0:
            raise FormatError("negative degree in a denominator")
        acc[k] = acc.get(k, Fraction(0)) + parse_rat(c)
    top = max(acc, default=0)
    return [acc.get(k, Fraction(0)) for k in range(top + 1)]


def series_from_json(d: dict) -> RationalForm:
    try:
        P = Poly2({(int(i), int(j)): parse_rat(c) for i, j, c in d.get("P", [])})
        q1 = _upoly(d.get("Q1", [[0, "1"]])) or [Fraction(1)]
        q2 = _upoly(d.get("Q2", [[0, "1"]])) or [Fraction(1)]
    except (TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"malformed series JSON: {exc}") from exc
    return RationalForm.make(P, q1, q2)


def table_to_json(t: CoeffTable) -> dict:
    return {"L": t.L, "G": t.G, "rows": [[rat(x) for x in r] for r in t.rows]}


def table_from_json(d: dict) -> CoeffTable:
    try:
        rows = tuple(tuple(parse_rat(x) for x in r) for r in d["rows"])
        return CoeffTable(int(d["L"]), int(d["G"]), rows)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed table JSON: {exc}") from exc


def upoly_to_json(coeffs) -> list[str]:
    return [rat(c) for c in coeffs]


def matrix_to_json(m) -> list[list[str]]:
    return [[rat(x) for x in r] for r in m]


def algebra_to_json(alg: SyntacticAlgebra) -> dict:
    return {
        "d": alg.d,
        "basis": [list(b) for b in alg.basis],
        "q1": upoly_to_json(alg.q1),
        "q2": upoly_to_json(alg.q2),
        "M1": matrix_to_json(alg.M1),
        "M2": matrix_to_json(alg.M2),
        "alphavec": [rat(x) for x in alg.alphavec],
    }


# -- skein vectors ------------------------------------------------------------------

def skein_to_json(v: SkeinVector) -> dict:
    return {
        "n": v.n,
        "m": v.m,
        "terms": [
            {
                "minimal": cobordism_to_json(e.minimal),
                "decoration": [list(p) for p in e.decoration],
                "coeff": rat(c),
            }
            for e, c in v.items()
        ],
    }


def skein_from_json(d: dict, alg: SyntacticAlgebra) -> SkeinVector:
    terms: dict[SkeinBasisElement, Fraction] = {}
    for t in d.get("terms", []):
        e = SkeinBasisElement(
            cobordism_from_json(t["minimal"]), tuple((int(i), int(j)) for i, j in t["decoration"])
        )
        if any(p not in alg.basis for p in e.decoration):
            raise FormatError("decoration outside the algebra basis")
        terms[e] = terms.get(e, Fraction(0)) + parse_rat(t["coeff"])
    return SkeinVector(int(d["n"]), int(d["m"]), alg, {e: c for e, c in terms.items() if c})


# -- Hilbert points ---------------------------------------------------------------------

def point_to_json(p: HilbertPoint) -> dict:
    return {
        "k": p.k,
        "basis": [list(b) for b in p.basis],
        "N1": matrix_to_json(p.N1),
        "N2": matrix_to_json(p.N2),
        "a": [rat(x) for x in p.a],
    }


def point_from_json(d: dict) -> HilbertPoint:
    try:
        return HilbertPoint.make(
            d["k"],
            d["basis"],
            [[parse_rat(x) for x in r] for r in d["N1"]],
            [[parse_rat(x) for x in r] for r in d["N2"]],
            [parse_rat(x) for x in d["a"]],
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed point JSON: {exc}") from exc
