"""Command-line front end.

Exit codes: 0 success, 2 bad input (parse or schema errors), 3 internal
integrality failure, 4 mismatch between the two ``powerdenom`` routes.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from merozeta.engine import (
    NONDEGENERACY,
    IntegralityError,
    LocalZetaStratum,
    ResolutionStratum,
    RouteMismatchError,
    TraceRow,
    ZetaPair,
    zeta_acampo_pair,
    zeta_newton_pair,
    zeta_power_denominator_checked,
    zeta_partial_resolution,
)
from merozeta.lattice import DimensionError, convex_hull, mixed_volume, mixed_volume_oracle
from merozeta.newton import NewtonDiagram, NewtonPair
from merozeta.parser import ParseError, VariableMap, parse_polynomial
from merozeta.zeta import ZetaFactorization

EXIT_INPUT = 2
EXIT_INTEGRALITY = 3
EXIT_MISMATCH = 4

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class InputError(ValueError):
    pass


def _read_text(value: str) -> str:
    if value.startswith("@"):
        return Path(value[1:]).read_text(encoding="utf-8")
    return value


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def infer_vars(*texts: str) -> VariableMap:
    """Variables in order of first appearance."""
    seen: list[str] = []
    for text in texts:
        for name in _IDENT.findall(text):
            if name not in seen:
                seen.append(name)
    if not seen:
        raise InputError("no variables found; pass --vars")
    return VariableMap(tuple(seen))


def _vars(arg: str | None, *texts: str) -> VariableMap:
    if arg is None:
        return infer_vars(*texts)
    try:
        return VariableMap.parse(arg)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _strata_list(data) -> list:
    if not isinstance(data, dict) or not isinstance(data.get("strata"), list):
        raise InputError('expected an object of the form {"strata": [...]}')
    return data["strata"]


def load_resolution_strata(data) -> list[ResolutionStratum]:
    out = []
    for i, entry in enumerate(_strata_list(data)):
        if not isinstance(entry, dict) or not all(_is_int(entry.get(f)) for f in ("k", "l", "chi")):
            raise InputError(f"stratum {i}: need integer fields k, l, chi")
        try:
            out.append(ResolutionStratum(entry["k"], entry["l"], entry["chi"]))
        except ValueError as exc:
            raise InputError(f"stratum {i}: {exc}") from exc
    return out


def load_local_strata(data) -> list[LocalZetaStratum]:
    out = []
    for i, entry in enumerate(_strata_list(data)):
        if not isinstance(entry, dict) or not _is_int(entry.get("chi")):
            raise InputError(f"stratum {i}: need integer field chi")
        try:
            z0 = ZetaFactorization.from_json(entry.get("zeta0"))
            zi = ZetaFactorization.from_json(entry.get("zetaInf"))
        except ValueError as exc:
            raise InputError(f"stratum {i}: {exc}") from exc
        out.append(LocalZetaStratum(z0, zi, entry["chi"]))
    return out


def load_bodies(data):
    if not isinstance(data, dict) or not _is_int(data.get("dim")) or not isinstance(data.get("bodies"), list):
        raise InputError('expected {"dim": int, "bodies": [[[int, ...], ...], ...]}')
    bodies = []
    for i, pts in enumerate(data["bodies"]):
        if not isinstance(pts, list) or not pts or not all(
            isinstance(p, list) and p and all(_is_int(x) for x in p) for p in pts
        ):
            raise InputError(f"body {i}: need a non-empty list of integer points")
        try:
            bodies.append(convex_hull(pts))
        except ValueError as exc:
            raise InputError(f"body {i}: {exc}") from exc
    return data["dim"], bodies


def result_json(pair: ZetaPair, assumptions=(), trace: list[TraceRow] | None = None) -> dict:
    out = {
        "zeta0": pair.zeta0.to_json(),
        "zetaInf": pair.zeta_inf.to_json(),
        "assumptions": list(assumptions),
    }
    if trace is not None:
        out["trace"] = [row.to_json() for row in trace]
    return out


def render_trace(trace: list[TraceRow]) -> str:
    lines = []
    current = None
    for row in trace:
        if row.subset != current:
            current = row.subset
            lines.append(f"I = {{{', '.join(map(str, current))}}}")
            lines.append(f"  {'a':<20} {'m1':>6} {'m2':>6} {'(l-1)!V_a':>10}  side")
        side = "-" if row.side is None else row.side.value
        a = "(" + ",".join(map(str, row.a)) + ")"
        lines.append(f"  {a:<20} {row.m1:>6} {row.m2:>6} {row.multiplicity:>10}  {side}")
    return "\n".join(lines)


def _emit(args, pair: ZetaPair, assumptions=(), trace=None) -> None:
    if args.json:
        print(json.dumps(result_json(pair, assumptions, trace)))
        return
    if trace is not None:
        print(render_trace(trace))
    print(f"zeta0 = {pair.zeta0}")
    print(f"zetaInf = {pair.zeta_inf}")


def cmd_pair(args) -> None:
    num, den = _read_text(args.num), _read_text(args.den)
    vars = _vars(args.vars, num, den)
    pair = NewtonPair(
        NewtonDiagram(parse_polynomial(num, vars)),
        NewtonDiagram(parse_polynomial(den, vars)),
    )
    trace = [] if args.trace else None
    _emit(args, zeta_newton_pair(pair, trace), [NONDEGENERACY], trace)


def cmd_powerdenom(args) -> None:
    num = _read_text(args.num)
    if args.vars is None:
        vars = infer_vars(args.axis, num)
    else:
        vars = _vars(args.vars)
    if args.axis not in vars.names:
        raise InputError(f"axis variable {args.axis!r} is not among {', '.join(vars.names)}")
    if args.degree < 1:
        raise InputError("--degree must be at least 1")
    gamma = NewtonDiagram(parse_polynomial(num, vars))
    result = zeta_power_denominator_checked(gamma, args.degree, vars.index(args.axis))
    _emit(args, result, [NONDEGENERACY])


def cmd_acampo(args) -> None:
    _emit(args, zeta_acampo_pair(load_resolution_strata(_load_json(args.file))))


def cmd_partial(args) -> None:
    _emit(args, zeta_partial_resolution(load_local_strata(_load_json(args.file))))


def cmd_mixvol(args) -> None:
    m, bodies = load_bodies(_load_json(args.file))
    try:
        value = mixed_volume(bodies, m)
        oracle = mixed_volume_oracle(bodies, m)
    except DimensionError as exc:
        raise InputError(str(exc)) from exc
    if args.json:
        print(json.dumps({"mixed_volume": str(value), "oracle": str(oracle)}))
    else:
        print(f"{value} (oracle: {oracle})")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = argparse.ArgumentParser(
        prog="merozeta",
        description="Monodromy zeta-functions of meromorphic germs P/Q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pair", parents=[common], help="zeta-functions from the Newton pair of P/Q")
    p.add_argument("--num", required=True, help="numerator P (or @file)")
    p.add_argument("--den", required=True, help="denominator Q (or @file)")
    p.add_argument("--vars", help="comma-separated coordinate order, e.g. x,y,z")
    p.add_argument("--trace", action="store_true", help="print the essential covector tables")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("powerdenom", parents=[common], help="zeta-functions of P / axis^d")
    p.add_argument("--num", required=True, help="numerator P (or @file)")
    p.add_argument("--degree", required=True, type=int, help="power d of the denominator")
    p.add_argument("--axis", required=True, help="name of the distinguished variable")
    p.add_argument("--vars", help="comma-separated coordinate order")
    p.set_defaults(func=cmd_powerdenom)

    p = sub.add_parser("acampo", parents=[common], help="zeta-functions from resolution strata (JSON)")
    p.add_argument("file", help="strata JSON file, or - for stdin")
    p.set_defaults(func=cmd_acampo)

    p = sub.add_parser("partial", parents=[common], help="zeta-functions from local zeta data (JSON)")
    p.add_argument("file", help="strata JSON file, or - for stdin")
    p.set_defaults(func=cmd_partial)

    p = sub.add_parser("mixvol", parents=[common], help="mixed volume of lattice polytopes (JSON)")
    p.add_argument("file", help='{"dim": m, "bodies": [...]} JSON file, or - for stdin')
    p.set_defaults(func=cmd_mixvol)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ParseError, InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except IntegralityError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTEGRALITY
    except RouteMismatchError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    return 0


if __name__ == "__main__":
    sys.exit(main())
