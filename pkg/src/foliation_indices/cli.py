"""Command-line front end.

Exit codes: 0 success, 1 parse or usage error, 2 refusal (non-invariant
hypersurface, uncertified dimension), 3 failed verdict.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import chern
from .indices import IndexRefusal
from .localalgebra import DEFAULT_NMAX
from .parser import ParseError
from .verify import run_scenario

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_REFUSAL = 2
EXIT_VERDICT = 3


class UsageError(Exception):
    """Invalid flag values."""


class _Parser(argparse.ArgumentParser):
    # usage errors share the parse-error exit code; 2 is reserved for refusals
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _emit(data: dict, text: str, as_json: bool) -> None:
    if as_json:
        sys.stdout.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def _load(path: str):
    from .parser import parse_scenario

    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read())


def cmd_indices(args) -> int:
    scenario = _load(args.file)
    if len(scenario.points) != 1:
        raise ParseError(f"germ file must list exactly one point, found {len(scenario.points)}")
    report = run_scenario(scenario, args.nmax)
    point = report.points[0]
    if point.refusal:
        print(f"refused: {point.refusal}", file=sys.stderr)
        return EXIT_REFUSAL
    data = point.to_dict()
    lines = [f"point {point.label} (chart {point.chart_id}) case {point.case}"]
    for name in ("mu_F", "mu_D", "tjurina", "multiplicity", "gsv", "schwartz", "residue_cn"):
        value = data[name]
        lines.append(f"  {name:<13}{'-' if value is None else value}")
    if data["cofactor"] is not None:
        lines.append(f"  cofactor     {data['cofactor']}")
    for name, level in data["certification"].items():
        lines.append(f"  certified {name} at N={level}")
    for note in data["notes"]:
        lines.append(f"  note: {note}")
    _emit(data, "\n".join(lines) + "\n", args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_scenario(_load(args.file), args.nmax)
    sys.stdout.write(report.to_json() if args.json else report.to_table())
    if report.refused:
        return EXIT_REFUSAL
    return EXIT_VERDICT if report.failed else EXIT_OK


def cmd_chern(args) -> int:
    n, d, k, mu = args.n, args.d, args.k, tuple(args.mu)
    if n < 2 or d < 0 or k < 1 or any(m < 1 for m in mu):
        raise UsageError("need n >= 2, d >= 0, k >= 1 and every mu >= 1")
    g = chern.GlobalData(n, d, k, mu)
    values = {
        "integral_X": g.integral_X(),
        "gsv_total": g.gsv_total(),
        "schwartz_total": g.schwartz_total(),
        "chi_D": g.euler_char(),
        "baum_bott_total": g.baum_bott_total(),
    }
    bounds = chern.poincare_bound_checks(g)
    lines = [f"n={n} d={d} k={k} mu={list(mu)}"]
    lines += [f"  {name} = {value}" for name, value in values.items()]
    lines.append("bounds:")
    for name, b in bounds.items():
        lines.append(f"  {name}: {b['status']} (lhs {b['lhs']}, rhs {b['rhs']})")
    data = {"input": {"n": n, "d": d, "k": k, "mu": list(mu)}, "values": values, "bounds": bounds}
    _emit(data, "\n".join(lines) + "\n", args.json)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.sweep_nmax < 2 or args.dmax < 2 or args.kmax < 2:
        raise UsageError("sweep bounds must be at least 2")
    result = chern.identity_sweep(args.sweep_nmax, args.dmax, args.kmax)
    lines = [f"box n<={result.n_max} d<={result.d_max} k<={result.k_max}: {result.triples} triples"]
    for name, count in result.checks.items():
        bad = result.failures_for(name)
        lines.append(f"  {name}: {count} checks, {len(bad)} failures")
    for f in result.failures:
        lines.append(f"FAIL {f.identity} n={f.n} d={f.d} k={f.k}: {f.lhs} vs {f.rhs}")
    data = {
        "box": {"n_max": result.n_max, "d_max": result.d_max, "k_max": result.k_max},
        "triples": result.triples,
        "checks": result.checks,
        "failures": [vars(f) for f in result.failures],
    }
    _emit(data, "\n".join(lines) + "\n", args.json)
    return EXIT_OK if result.ok else EXIT_VERDICT


def build_parser() -> argparse.ArgumentParser:
    nmax = _Parser(add_help=False)
    nmax.add_argument("--nmax", type=int, default=argparse.SUPPRESS, help=f"truncation cap (default {DEFAULT_NMAX})")
    out = _Parser(add_help=False)
    out.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="structured output")

    parser = _Parser(prog="foliation-indices", description="Exact local indices of foliations along invariant hypersurfaces.")
    parser.add_argument("--nmax", type=int, default=DEFAULT_NMAX, help=f"truncation cap (default {DEFAULT_NMAX})")
    parser.add_argument("--json", action="store_true", help="structured output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("indices", parents=[nmax, out], help="indices of a single-point germ file")
    p.add_argument("file")
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("verify", parents=[nmax, out], help="verify a scenario file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chern", parents=[out], help="global characteristic numbers on P^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mu", type=int, nargs="*", default=[], help="Milnor numbers of Sing(D)")
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("sweep", parents=[out], help="exhaustive identity sweep")
    p.add_argument("--nmax", dest="sweep_nmax", type=int, default=8)
    p.add_argument("--dmax", type=int, default=10)
    p.add_argument("--kmax", type=int, default=10)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help or a usage error
        return exc.code or EXIT_OK
    if args.nmax < 1:
        print("foliation-indices: error: --nmax must be positive", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UsageError as exc:
        print(f"foliation-indices: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IndexRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSAL
    except ValueError as exc:
        # semantic input errors raised below the parser (bad point length, n=1)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
