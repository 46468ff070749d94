"""Batch command line front end (``tfs``).

Exit status is 0 on success, 1 on a domain error and 2 on a usage error.
Diagnostics go to stderr; results go to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import cobordism as cb
from . import gligible as gl
from . import hilbert as hb
from . import serialize as io
from . import series as sr
from . import skein as sk
from .parser import ArityError, ParseError, elaborate

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class Config:
    cap: int = sk.DEFAULT_CAP
    fmt: str = "json"
    verbose: int = 0

    def __post_init__(self):
        if self.cap < 0:
            raise ValueError("cap must be nonnegative")


class UsageError(Exception):
    pass


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise io.FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _series(path: str) -> sr.RationalForm:
    return io.series_from_json(_load_json(path))


def _expressions(args) -> list[tuple[str, str]]:
    """``(label, text)`` pairs from ``--expr`` or a one-per-line ``--exprs`` file."""
    if args.expr is not None and args.exprs is not None:
        raise UsageError("give either --expr or --exprs, not both")
    if args.expr is not None:
        return [("", args.expr)]
    if args.exprs is None:
        raise UsageError("an expression is required (--expr or --exprs)")
    out = []
    for lineno, line in enumerate(Path(args.exprs).read_text().splitlines(), start=1):
        if line.strip() and not line.lstrip().startswith("#"):
            out.append((f"{args.exprs}:{lineno}", line))
    return out


class LocatedError(ValueError):
    """A parse or arity error positioned inside an expression file."""


def _elaborate(label: str, text: str) -> cb.Cobordism:
    try:
        return elaborate(text)
    except (ParseError, ArityError) as exc:
        if label:
            raise LocatedError(f"{label}:{exc.col}: {exc.reason}") from exc
        raise


def _emit(obj, cfg: Config) -> None:
    print(io.dumps(obj))


def _emit_rows(header: list[str], rows: list[list], obj, cfg: Config) -> None:
    if cfg.fmt == "tsv":
        print("\t".join(header))
        for r in rows:
            print("\t".join(str(x) for x in r))
    else:
        _emit(obj, cfg)


# -- subcommands ---------------------------------------------------------------

def cmd_compose(args, cfg: Config) -> None:
    for label, text in _expressions(args):
        _emit(io.cobordism_to_json(_elaborate(label, text)), cfg)


def cmd_eval(args, cfg: Config) -> None:
    z = _series(args.series)
    for label, text in _expressions(args):
        f = _elaborate(label, text)
        if f.viewable or f.arity != (0, 0):
            raise cb.CobordismError(f"eval needs a closed (floating) morphism, got {f.n}->{f.m}")
        print(io.rat(sr.evaluate_floating(z, f.floating)))


def cmd_coeff(args, cfg: Config) -> None:
    if args.l < 0 or args.g < 0:
        raise UsageError("--l and --g must be nonnegative")
    print(io.rat(sr.coeff(_series(args.series), args.l, args.g)))


def cmd_syntactic(args, cfg: Config) -> None:
    alg = sr.syntactic_algebra(_series(args.series))
    out = io.algebra_to_json(alg)
    out["degenerate"] = alg.degenerate
    _emit(out, cfg)


def _bounds(text: str) -> tuple[int, int, int, int]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--bounds expects four integers a,b,c,d, got {text!r}") from None
    if len(parts) != 4:
        raise UsageError(f"--bounds expects four integers a,b,c,d, got {text!r}")
    return parts  # type: ignore[return-value]


def cmd_fit(args, cfg: Config) -> None:
    table = io.table_from_json(_load_json(args.table))
    z = sr.fit_rational(table, _bounds(args.bounds))
    _emit(None if z is None else io.series_to_json(z), cfg)


def cmd_basis(args, cfg: Config) -> None:
    from .parser import format_cobordism

    mins = sk.enumerate_minimal(args.n, args.m, cfg.cap)
    d = 1
    if args.series:
        d = sr.syntactic_algebra(_series(args.series)).d
    dim = 0 if d == 0 else sum(d ** len(y.viewable) for y in mins)
    rows = [[k, len(y.viewable), format_cobordism(y)] for k, y in enumerate(mins)]
    obj = {
        "n": args.n,
        "m": args.m,
        "count": len(mins),
        "d": d,
        "skein_dim": dim,
        "minimal": [io.cobordism_to_json(y) for y in mins] if args.list else [],
    }
    if cfg.fmt == "tsv":
        print(f"# count={len(mins)} d={d} skein_dim={dim}")
        _emit_rows(["index", "components", "form"], rows if args.list else [], obj, cfg)
    else:
        _emit(obj, cfg)


def cmd_dims(args, cfg: Config) -> None:
    alg = sr.syntactic_algebra(_series(args.series))
    rows = gl.dims_table(alg, args.max_n, cfg.cap)
    obj = [{"n": n, "skein_dim": s, "state_dim": t} for n, s, t in rows]
    _emit_rows(["n", "skein_dim", "state_dim"], [list(r) for r in rows], obj, cfg)


def cmd_reduce(args, cfg: Config) -> None:
    alg = sr.syntactic_algebra(_series(args.series))
    for label, text in _expressions(args):
        _emit(io.skein_to_json(sk.reduce_one(alg, _elaborate(label, text))), cfg)


def cmd_trace(args, cfg: Config) -> None:
    z = _series(args.series)
    for label, text in _expressions(args):
        print(io.rat(gl.trace_alpha(z, _elaborate(label, text))))


def cmd_hilbert(args, cfg: Config) -> None:
    p = io.point_from_json(_load_json(args.point))
    problem = hb.point_validate(p)
    if problem is not None:
        _emit({"k": p.k, "valid": False, "violation": problem}, cfg)
        raise hb.PointError(f"invalid point: {problem}")
    cls = hb.classify_point(p)
    gram, det = hb.gram_point(p)
    z = hb.point_to_series(p)
    _emit(
        {
            "k": cls.k,
            "m": cls.m,
            "in_Dk": cls.in_Dk,
            "det": io.rat(det),
            "gram": io.matrix_to_json(gram),
            "series": io.series_to_json(z),
            "syntactic_d": sr.syntactic_algebra(z).d,
        },
        cfg,
    )


def cmd_beta(args, cfg: Config) -> None:
    if args.action == "pack":
        if not args.alpha or not args.gamma:
            raise UsageError("beta pack needs --alpha and --gamma")
        _emit(io.series_to_json(sr.beta_pack(_series(args.alpha), _series(args.gamma))), cfg)
    else:
        if not args.series:
            raise UsageError("beta unpack needs --series")
        za, zg = sr.beta_unpack(_series(args.series))
        _emit({"alpha": io.series_to_json(za), "gamma": io.series_to_json(zg)}, cfg)


# -- argument parsing ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tfs", description="Exact computations with thin flat surfaces.")
    p.add_argument("--format", choices=("json", "tsv"), default="json", dest="fmt")
    p.add_argument("--cap", type=int, default=None, help="arity cap (default: $TFS_CAP or 7)")
    p.add_argument("-v", "--verbose", action="count", default=0)
    # the same options are accepted after the subcommand name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), dest="fmt", default=argparse.SUPPRESS)
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser  # type: ignore[method-assign]

    def with_expr(q):
        q.add_argument("--expr", help="morphism word, e.g. 'iota ; b1 ; eps'")
        q.add_argument("--exprs", help="file with one morphism word per line")

    q = sub.add_parser("compose", help="canonical cobordism JSON of a word")
    with_expr(q)
    q.set_defaults(func=cmd_compose)

    q = sub.add_parser("eval", help="evaluate a closed word on a series")
    q.add_argument("--series", required=True)
    with_expr(q)
    q.set_defaults(func=cmd_eval)

    q = sub.add_parser("coeff", help="one coefficient of a series")
    q.add_argument("--series", required=True)
    q.add_argument("--l", type=int, required=True)
    q.add_argument("--g", type=int, required=True)
    q.set_defaults(func=cmd_coeff)

    q = sub.add_parser("syntactic", help="syntactic algebra of a series")
    q.add_argument("--series", required=True)
    q.set_defaults(func=cmd_syntactic)

    q = sub.add_parser("fit", help="fit a rational form to a coefficient table")
    q.add_argument("--table", required=True)
    q.add_argument("--bounds", required=True, help="degQ1,degQ2,degP1,degP2")
    q.set_defaults(func=cmd_fit)

    q = sub.add_parser("basis", help="minimal cobordisms and skein dimension")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--series", help="series whose algebra dimension weights components")
    q.add_argument("--list", action="store_true", help="list every minimal cobordism")
    q.set_defaults(func=cmd_basis)

    q = sub.add_parser("dims", help="skein and state-space dimensions")
    q.add_argument("--series", required=True)
    q.add_argument("--max-n", type=int, required=True, dest="max_n")
    q.set_defaults(func=cmd_dims)

    q = sub.add_parser("reduce", help="skein coordinates of a word")
    q.add_argument("--series", required=True)
    with_expr(q)
    q.set_defaults(func=cmd_reduce)

    q = sub.add_parser("trace", help="trace of an endomorphism word")
    q.add_argument("--series", required=True)
    with_expr(q)
    q.set_defaults(func=cmd_trace)

    q = sub.add_parser("hilbert", help="validate and classify a chart point")
    q.add_argument("--point", required=True)
    q.set_defaults(func=cmd_hilbert)

    q = sub.add_parser("beta", help="pack or unpack closed-surface series")
    q.add_argument("action", choices=("pack", "unpack"))
    q.add_argument("--alpha")
    q.add_argument("--gamma")
    q.add_argument("--series")
    q.set_defaults(func=cmd_beta)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cap = args.cap if args.cap is not None else sk.default_cap()
        cfg = Config(cap=cap, fmt=args.fmt, verbose=args.verbose)
    except ValueError as exc:
        print(f"tfs: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args.func(args, cfg)
    except UsageError as exc:
        print(f"tfs {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError, OSError, cb.SpliceError) as exc:
        print(f"tfs {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
