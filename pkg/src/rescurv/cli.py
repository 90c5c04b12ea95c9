"""Command-line interface.

Graphs are given either as generator shorthand (``P4``, ``C5``, ``Q3``,
``P3xP4``, ``P3^3``) or as a path to a ``.json``/``.csv`` edge-list file.
Exit codes: 0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import bounds as bounds_mod
from . import grids_ladders as gl
from .curvature import compute_curvatures, graph_curvature, sign_classify
from .errors import RescurvError
from .families import parse_graph_spec, parse_product_spec
from .graph import WeightedGraph, load_graph
from .products import classify_boundary_interior, product_graph, product_node_curvatures
from .resistance_laws import mc_effective_resistance
from .spectral import effective_resistance, matrix_to_csv, resistance_matrix_of

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2

DEFAULT_MAX_EXACT_N = 256


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; this tool reserves 2 for verification
    def error(self, message):
        raise _UsageError(message)


def _load_graph_arg(text: str) -> WeightedGraph:
    try:
        return parse_graph_spec(text)
    except ValueError as spec_err:
        p = Path(text)
        if p.exists():
            return load_graph(p)
        raise _UsageError(
            f"{text!r} is neither generator shorthand ({spec_err}) nor an existing file"
        ) from None


def _check_exact_cap(g: WeightedGraph, backend: str, cap: int) -> None:
    if backend == "exact" and g.n > cap:
        raise _UsageError(
            f"graph has {g.n} vertices; the exact backend is capped at {cap} "
            f"(raise --max-exact-n or use --backend float)"
        )


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _fmt_value(x) -> str:
    return str(x) if isinstance(x, Fraction) else repr(float(x))


def _curvature_dot(g: WeightedGraph, values) -> str:
    lines = ["graph G {", "  node [shape=circle];"]
    for i in range(g.n):
        lines.append(f'  {i} [label="{i}: {_fmt_value(values[i])}"];')
    for u, v, r in g.edges:
        if r == 1:
            lines.append(f"  {u} -- {v};")
        else:
            lines.append(f'  {u} -- {v} [label="{_fmt_value(r)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommands


def _cmd_curvature(args) -> int:
    g = _load_graph_arg(args.graph)
    _check_exact_cap(g, args.backend, args.max_exact_n)
    p = compute_curvatures(g, args.backend)
    if args.format == "json":
        _emit(json.dumps(p.to_json_obj(), separators=(",", ":")), args.out)
    elif args.format == "csv":
        _emit(p.to_csv(), args.out)
    else:
        _emit(_curvature_dot(g, p.values), args.out)
    return EXIT_OK


def _cmd_resistance(args) -> int:
    g = _load_graph_arg(args.graph)
    _check_exact_cap(g, args.backend, args.max_exact_n)
    if args.pair is not None:
        u, v = args.pair
        value = effective_resistance(g, u, v, args.backend)
        if args.format == "json":
            _emit(json.dumps({"u": u, "v": v, "resistance": _fmt_value(value)}), args.out)
        else:
            _emit(_fmt_value(value), args.out)
        return EXIT_OK
    omega = resistance_matrix_of(g, args.backend)
    if args.format == "json":
        if omega.backend == "exact":
            rows = [[str(x) for x in row] for row in omega.entries]
        else:
            rows = [[float(x) for x in row] for row in omega.entries]
        _emit(json.dumps({"n": omega.n, "resistances": rows}), args.out)
    else:
        _emit(matrix_to_csv(omega), args.out)
    return EXIT_OK


def _cmd_product(args) -> int:
    pd = parse_product_spec(args.factors)
    g = product_graph(pd)
    _check_exact_cap(g, args.backend, args.max_exact_n)
    p = product_node_curvatures(pd, args.backend)
    if args.report == "curvature":
        _emit(json.dumps(p.to_json_obj(), separators=(",", ":")), args.out)
        return EXIT_OK
    epsilon = 0 if p.backend == "exact" else 1e-9
    signs = sign_classify(p, epsilon)
    summary = {
        "factors": args.factors,
        "n": g.n,
        "negative": signs.count(-1),
        "zero": signs.count(0),
        "positive": signs.count(1),
        "min": _fmt_value(graph_curvature(p)),
    }
    try:
        labels = classify_boundary_interior(pd)
        summary["negative_boundary"] = sum(
            1 for s, lab in zip(signs, labels) if s < 0 and lab == "boundary"
        )
        summary["negative_interior"] = sum(
            1 for s, lab in zip(signs, labels) if s < 0 and lab == "interior"
        )
    except RescurvError:
        pass  # boundary split only applies to path products
    if args.report == "signs":
        summary["signs"] = signs
    _emit(json.dumps(summary), args.out)
    return EXIT_OK


def _cmd_grid_verify(args) -> int:
    report = gl.verify_grid_theorem(args.m, args.n, "exact", max_side=args.max_side)
    floor_applies = max(args.m, args.n) > 3
    floor_ok = (not floor_applies) or report.boundary_min >= gl.WIDE_GRID_BOUNDARY_FLOOR
    payload = {
        "m": report.m,
        "n": report.n,
        "interior_all_negative": report.interior_all_negative,
        "boundary_all_nonnegative": report.boundary_all_nonnegative,
        "boundary_min": str(report.boundary_min),
        "boundary_argmin": report.boundary_argmin,
        "floor_17_4830_applies": floor_applies,
        "floor_17_4830_satisfied": floor_ok,
    }
    _emit(json.dumps(payload), args.out)
    return EXIT_OK if (report.ok and floor_ok) else EXIT_VERIFICATION


def _cmd_ladder(args) -> int:
    n = args.n
    lines = []
    if args.table == "alpha":
        table = gl.ladder_alpha(n)
        lines = ["k,alpha"] + [f"{k},{table.alpha(k)}" for k in range(1, n + 1)]
    elif args.table == "rungs":
        lines = ["k,resistance"] + [
            f"{k},{gl.rung_resistance(n, k)}" for k in range(1, n + 1)
        ]
    elif args.table == "rails":
        lines = ["k,resistance"] + [
            f"{k},{gl.rail_resistance(n, k)}" for k in range(1, n)
        ]
    else:
        p = gl.ladder_curvatures(n)
        lines = ["vertex,curvature"] + [
            f"{i},{x}" for i, x in enumerate(p.values)
        ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _cmd_bounds_check(args) -> int:
    g1 = _load_graph_arg(args.g1)
    g2 = _load_graph_arg(args.g2)
    prod_n = g1.n * g2.n
    if args.backend == "exact" and prod_n > args.max_exact_n:
        raise _UsageError(
            f"product has {prod_n} vertices; exact backend capped at {args.max_exact_n}"
        )
    report = bounds_mod.validate_bounds(
        g1, g2, args.backend, both_directions=args.both_directions
    )
    lines = ["direction,factor_edge,copy_at,edge_a,edge_b,actual,lb,ub,lb_slack,ub_slack,ok"]
    for r in report.records:
        lb_repr = _fmt_value(r.lb_hi) if r.lb_exact else repr(float(r.lb_hi))
        ub_repr = "" if r.ub is None else _fmt_value(r.ub)
        lb_slack = float(r.actual) - float(r.lb_hi)
        ub_slack = "" if r.ub is None else repr(float(r.ub) - float(r.actual))
        ok = r.holds_lb and r.holds_ub
        lines.append(
            f"{r.direction},{r.factor_edge[0]}-{r.factor_edge[1]},{r.copy_at},"
            f"{r.product_edge[0]},{r.product_edge[1]},{_fmt_value(r.actual)},"
            f"{lb_repr},{ub_repr},{lb_slack!r},{ub_slack},{ok}"
        )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if report.ok else EXIT_VERIFICATION


def _cmd_mc_check(args) -> int:
    g = _load_graph_arg(args.graph)
    est = mc_effective_resistance(g, args.u, args.v, args.walks, args.seed)
    payload = {
        "estimate": est.estimate,
        "stderr": est.stderr,
        "walks": args.walks,
        "seed": args.seed,
    }
    if g.n <= args.max_exact_n:
        exact = effective_resistance(g, args.u, args.v, "exact")
        payload["exact"] = str(exact)
        if est.stderr > 0:
            payload["z"] = (est.estimate - float(exact)) / est.stderr
    _emit(json.dumps(payload), args.out)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    lines: list[str] = []
    if args.kind == "central-edge":
        rows = gl.central_edge_resistance_sweep(args.n_max, "float")
        lines = ["n,resistance"] + [f"{n},{v!r}" for n, v in rows]
    elif args.kind == "alpha":
        table = gl.ladder_alpha(args.n_max)
        lines = ["n,alpha"] + [f"{k},{table.alpha(k)}" for k in range(1, args.n_max + 1)]
    elif args.kind == "corner":
        lines = ["n,corner_curvature"] + [
            f"{n},{gl.corner_curvature(n)}" for n in range(1, args.n_max + 1)
        ]
    else:  # boundary-min
        lines = ["m,n,boundary_min"]
        for m in range(3, args.m_max + 1):
            for n in range(m, args.n_max + 1):
                rep = gl.verify_grid_theorem(m, n, "exact", max_side=max(args.m_max, args.n_max))
                lines.append(f"{m},{n},{rep.boundary_min}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_common(sub, backend_default="exact"):
    sub.add_argument("--backend", choices=["exact", "float"], default=backend_default)
    sub.add_argument("--out", metavar="PATH", default=None)
    sub.add_argument("--max-exact-n", type=int, default=DEFAULT_MAX_EXACT_N)


def build_parser() -> _Parser:
    parser = _Parser(prog="rescurv", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("curvature", help="node resistance curvatures of a graph")
    sp.add_argument("graph")
    sp.add_argument("--format", choices=["json", "csv", "dot"], default="json")
    _add_common(sp)
    sp.set_defaults(func=_cmd_curvature)

    sp = subs.add_parser("resistance", help="effective resistances of a graph")
    sp.add_argument("graph")
    sp.add_argument("--pair", nargs=2, type=int, metavar=("U", "V"), default=None)
    sp.add_argument("--format", choices=["json", "csv"], default="csv")
    _add_common(sp)
    sp.set_defaults(func=_cmd_resistance)

    sp = subs.add_parser("product", help="curvature analysis of a Cartesian product")
    sp.add_argument("factors", help="shorthand like P3xP4 or P3^3")
    sp.add_argument("--report", choices=["signs", "curvature", "summary"], default="summary")
    _add_common(sp)
    sp.set_defaults(func=_cmd_product)

    sp = subs.add_parser("grid-verify", help="verify the grid curvature sign pattern")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("--max-side", type=int, default=12)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=_cmd_grid_verify)

    sp = subs.add_parser("ladder", help="exact closed-form ladder tables")
    sp.add_argument("n", type=int)
    sp.add_argument(
        "--table",
        choices=["curvatures", "alpha", "rungs", "rails"],
        default="curvatures",
    )
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=_cmd_ladder)

    sp = subs.add_parser("bounds-check", help="check product edge resistance bounds")
    sp.add_argument("--g1", required=True)
    sp.add_argument("--g2", required=True)
    sp.add_argument("--both-directions", action="store_true")
    _add_common(sp)
    sp.set_defaults(func=_cmd_bounds_check)

    sp = subs.add_parser("mc-check", help="Monte Carlo resistance vs the exact value")
    sp.add_argument("graph")
    sp.add_argument("u", type=int)
    sp.add_argument("v", type=int)
    sp.add_argument("--walks", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default=None)
    sp.add_argument("--max-exact-n", type=int, default=DEFAULT_MAX_EXACT_N)
    sp.set_defaults(func=_cmd_mc_check)

    sp = subs.add_parser("sweep", help="emit CSV tables for plots")
    sp.add_argument(
        "kind", choices=["central-edge", "alpha", "corner", "boundary-min"]
    )
    sp.add_argument("--n-max", type=int, default=15)
    sp.add_argument("--m-max", type=int, default=8)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"rescurv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RescurvError, ValueError, OSError) as exc:
        print(f"rescurv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
