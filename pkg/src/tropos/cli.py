"""Command-line front end.

One process per command; deterministic outputs for fixed inputs and seed.
Exit codes: 0 success, 2 parse errors, 3 capability errors, 4 divergence,
5 method cross-check mismatch, 1 other domain errors.  The optional
--plot flag renders a matplotlib figure next to the delimited output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .analysis import integrate, legendre_transform, measure_integrate
from .dequant import add_h, deformation_residual
from .errors import (
    CapabilityError,
    DivergenceError,
    ParseError,
    TroposError,
    VerificationError,
)
from .graphio import (
    format_weight,
    graph_matrix,
    parse_complex_curve,
    parse_graph,
    parse_grid_function,
    parse_tropical_polynomial,
    unit_column,
)
from .interval import IntervalSemiring, interval_bellman_solve
from .matrix import (
    cycle_mean_eigenvalue,
    mat_closure,
    solve_bellman_gauss_seidel,
    solve_bellman_jacobi,
)
from .tropical import amoeba_sample, convergence_experiment, corner_locus_sample

__all__ = ["main", "build_parser"]


def _workers() -> int:
    raw = os.environ.get("TROPOS_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ParseError(f"TROPOS_THREADS must be an integer, got {raw!r}") from None


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(args, text: str):
    if args.output:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj):
    _emit(args, json.dumps(obj, indent=2) + "\n")


def _num(x) -> str:
    return repr(x)


def _parse_region(text: str):
    try:
        axes = []
        for chunk in text.split(","):
            lo, hi = chunk.split(":")
            axes.append((float(lo), float(hi)))
        return axes
    except ValueError:
        raise ParseError(
            f"bad region {text!r} (want 'x0:x1,y0:y1')"
        ) from None


def _parse_floats(text: str, what: str):
    try:
        values = [float(v) for v in text.split(",") if v != ""]
    except ValueError:
        raise ParseError(f"bad {what} list {text!r}") from None
    if not values:
        raise ParseError(f"empty {what} list")
    return values


def _grid(lo: float, hi: float, step: float):
    if step <= 0:
        raise ParseError(f"step must be positive, got {step}")
    if hi < lo:
        raise ParseError(f"empty range [{lo}, {hi}]")
    count = max(int(round((hi - lo) / step)) + 1, 1)
    if count == 1:
        return [lo]
    actual = (hi - lo) / (count - 1)
    return [lo + k * actual for k in range(count)]


def _solver(name: str):
    return solve_bellman_jacobi if name == "jacobi" else solve_bellman_gauss_seidel


def cmd_solve(args) -> int:
    g = parse_graph(_read(args.graph))
    # distances from the source propagate along incoming edges
    A = graph_matrix(g).transpose()
    F = unit_column(g, args.source)
    report = _solver(args.method)(A, F, args.max_iter)
    if args.verify:
        other_name = "gauss-seidel" if args.method == "jacobi" else "jacobi"
        other = _solver(other_name)(A, F, args.max_iter)
        if other.result != report.result:
            raise VerificationError(
                f"{args.method} and {other_name} fixpoints differ"
            )
    values = report.result.column(0)
    if args.format == "json":
        _emit_json(
            args,
            {
                "semiring": g.semiring.name,
                "source": args.source,
                "method": args.method,
                "iterations": report.iterations,
                "values": {
                    node: format_weight(v, g.semiring)
                    for node, v in zip(g.nodes, values)
                },
            },
        )
    else:
        lines = [
            f"{node}\t{format_weight(v, g.semiring)}"
            for node, v in zip(g.nodes, values)
        ]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_closure(args) -> int:
    g = parse_graph(_read(args.graph))
    report = mat_closure(graph_matrix(g), args.max_iter)
    rows = report.result.to_rows()
    if args.format == "json":
        _emit_json(
            args,
            {
                "semiring": g.semiring.name,
                "nodes": g.nodes,
                "iterations": report.iterations,
                "entries": [
                    [format_weight(v, g.semiring) for v in row] for row in rows
                ],
            },
        )
    else:
        lines = [f"# semiring: {g.semiring.name}", "# nodes: " + "\t".join(g.nodes)]
        for node, row in zip(g.nodes, rows):
            lines.append(
                node + "\t" + "\t".join(format_weight(v, g.semiring) for v in row)
            )
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_eigen(args) -> int:
    g = parse_graph(_read(args.graph))
    value = cycle_mean_eigenvalue(graph_matrix(g))
    if args.format == "json":
        _emit_json(args, {"semiring": g.semiring.name, "eigenvalue": value})
    else:
        _emit(args, _num(value) + "\n")
    return 0


def cmd_integrate(args) -> int:
    f = parse_grid_function(_read(args.grid), default_semiring=args.semiring)
    if args.density:
        density = parse_grid_function(
            _read(args.density), default_semiring=f.semiring.name
        )
        value = measure_integrate(f, density)
    else:
        value = integrate(f)
    text = format_weight(value, f.semiring)
    if args.format == "json":
        _emit_json(args, {"semiring": f.semiring.name, "integral": text})
    else:
        _emit(args, text + "\n")
    return 0


def cmd_legendre(args) -> int:
    f = parse_grid_function(_read(args.grid), default_semiring="maxplus")
    slopes = _grid(args.slope_min, args.slope_max, args.slope_step)
    lf = legendre_transform(f, slopes)
    if args.format == "json":
        _emit_json(
            args,
            {"slopes": lf.domain, "values": lf.values},
        )
    else:
        lines = [f"{_num(p)}\t{_num(v)}" for p, v in zip(lf.domain, lf.values)]
        _emit(args, "\n".join(lines) + "\n")
    if args.plot:
        from . import plotting

        plotting.save_curves(
            args.plot,
            [
                (list(f.domain), list(f.values), "f"),
                (list(lf.domain), list(lf.values), "Lf"),
            ],
            xlabel="x / p",
            ylabel="value",
            title="Legendre transform",
        )
    return 0


def cmd_deform(args) -> int:
    hs = _parse_floats(args.h, "h")
    rows = [
        (h, add_h(args.u, args.v, h), deformation_residual(args.u, args.v, h))
        for h in hs
    ]
    if args.format == "json":
        _emit_json(
            args,
            {
                "u": args.u,
                "v": args.v,
                "rows": [{"h": h, "sum": s, "residual": r} for h, s, r in rows],
            },
        )
    else:
        lines = ["# h\tsum\tresidual"]
        lines += [f"{_num(h)}\t{_num(s)}\t{_num(r)}" for h, s, r in rows]
        _emit(args, "\n".join(lines) + "\n")
    if args.plot:
        from . import plotting

        plotting.save_series(
            args.plot,
            [(h, r) for h, _, r in rows],
            xlabel="h",
            ylabel="residual",
            title=f"deformed addition residual at u={args.u}, v={args.v}",
            loglog=True,
        )
    return 0


def cmd_interval_solve(args) -> int:
    g = parse_graph(_read(args.graph))
    if not isinstance(g.semiring, IntervalSemiring):
        raise CapabilityError(
            f"interval-solve needs an interval semiring, got {g.semiring.name}"
        )
    A = graph_matrix(g).transpose()
    F = unit_column(g, args.source)
    X = interval_bellman_solve(A, F, args.max_iter)
    values = X.column(0)
    if args.format == "json":
        _emit_json(
            args,
            {
                "semiring": g.semiring.name,
                "source": args.source,
                "values": {
                    node: format_weight(v, g.semiring)
                    for node, v in zip(g.nodes, values)
                },
            },
        )
    else:
        lines = [
            f"{node}\t{format_weight(v, g.semiring)}"
            for node, v in zip(g.nodes, values)
        ]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _emit_cloud(args, cloud):
    if args.format == "json":
        _emit_json(
            args,
            {
                "tag": cloud.tag,
                "skipped": cloud.skipped,
                "points": [[x, y] for x, y in cloud.points.tolist()],
            },
        )
    else:
        lines = [f"{_num(x)}\t{_num(y)}" for x, y in cloud.points.tolist()]
        _emit(args, "\n".join(lines) + ("\n" if lines else ""))


def cmd_tropical(args) -> int:
    p = parse_tropical_polynomial(_read(args.poly))
    region = _parse_region(args.region)
    cloud = corner_locus_sample(p, region, args.step, args.eps)
    _emit_cloud(args, cloud)
    if args.plot:
        from . import plotting

        plotting.save_point_clouds(args.plot, [cloud], title="corner locus")
    return 0


def cmd_amoeba(args) -> int:
    f = parse_complex_curve(_read(args.poly))
    if args.seed < 0:
        raise ParseError(f"seed must be nonnegative, got {args.seed}")
    cloud = amoeba_sample(
        f,
        args.h,
        args.samples,
        args.seed,
        log_radius=args.log_radius,
        workers=_workers(),
    )
    _emit_cloud(args, cloud)
    if args.plot:
        from . import plotting

        plotting.save_point_clouds(args.plot, [cloud], title=f"amoeba, h={args.h}")
    return 0


def cmd_converge(args) -> int:
    f = parse_complex_curve(_read(args.curve))
    p = parse_tropical_polynomial(_read(args.tropical))
    if args.seed < 0:
        raise ParseError(f"seed must be nonnegative, got {args.seed}")
    hs = _parse_floats(args.h_list, "h")
    rows = convergence_experiment(
        f,
        p,
        hs,
        args.samples,
        args.seed,
        grid_resolution=args.resolution,
        workers=_workers(),
    )
    if args.format == "json":
        _emit_json(
            args,
            {"rows": [{"h": h, "distance": d} for h, d in rows]},
        )
    else:
        lines = ["# h\tdistance"]
        lines += [f"{_num(h)}\t{_num(d)}" for h, d in rows]
        _emit(args, "\n".join(lines) + "\n")
    if args.plot:
        from . import plotting

        plotting.save_series(
            args.plot,
            rows,
            xlabel="h",
            ylabel="Hausdorff distance",
            title="amoeba-to-skeleton convergence",
            loglog=True,
        )
    return 0


def _add_common(sub, plot=False):
    sub.add_argument("--output", "-o", help="write output here instead of stdout")
    sub.add_argument(
        "--format", choices=("tsv", "json"), default="tsv", help="output format"
    )
    if plot:
        sub.add_argument("--plot", help="also render a figure to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropos",
        description="Idempotent semiring algebra and desk-scale tropical geometry.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("solve", help="solve X = H*X (+) F from a source node")
    sub.add_argument("graph", help="edge-list file")
    sub.add_argument("--source", required=True, help="source node label")
    sub.add_argument(
        "--method", choices=("jacobi", "gauss-seidel"), default="jacobi"
    )
    sub.add_argument("--max-iter", type=int, default=None)
    sub.add_argument(
        "--verify",
        action="store_true",
        help="run both methods and fail if the fixpoints differ",
    )
    _add_common(sub)
    sub.set_defaults(func=cmd_solve)

    sub = subs.add_parser("closure", help="Kleene closure of the adjacency matrix")
    sub.add_argument("graph")
    sub.add_argument("--max-iter", type=int, default=None)
    _add_common(sub)
    sub.set_defaults(func=cmd_closure)

    sub = subs.add_parser("eigen", help="optimal cycle-mean eigenvalue")
    sub.add_argument("graph")
    _add_common(sub)
    sub.set_defaults(func=cmd_eigen)

    sub = subs.add_parser("integrate", help="idempotent integral of a grid function")
    sub.add_argument("grid", help="two-column point/value file")
    sub.add_argument("--density", help="optional density grid function")
    sub.add_argument("--semiring", default="maxplus", help="semiring when no header")
    _add_common(sub)
    sub.set_defaults(func=cmd_integrate)

    sub = subs.add_parser("legendre", help="discrete Legendre transform")
    sub.add_argument("grid")
    sub.add_argument("--slope-min", type=float, required=True)
    sub.add_argument("--slope-max", type=float, required=True)
    sub.add_argument("--slope-step", type=float, required=True)
    _add_common(sub, plot=True)
    sub.set_defaults(func=cmd_legendre)

    sub = subs.add_parser("deform", help="deformed addition sweep over h")
    sub.add_argument("--u", type=float, required=True)
    sub.add_argument("--v", type=float, required=True)
    sub.add_argument("--h", required=True, help="comma-separated h values")
    _add_common(sub, plot=True)
    sub.set_defaults(func=cmd_deform)

    sub = subs.add_parser(
        "interval-solve", help="exact interval Bellman solve by endpoints"
    )
    sub.add_argument("graph")
    sub.add_argument("--source", required=True)
    sub.add_argument("--max-iter", type=int, default=None)
    _add_common(sub)
    sub.set_defaults(func=cmd_interval_solve)

    sub = subs.add_parser("tropical", help="sample a tropical corner locus")
    sub.add_argument("poly", help="tropical polynomial file")
    sub.add_argument("--region", required=True, help="box as 'x0:x1,y0:y1'")
    sub.add_argument("--step", type=float, required=True)
    sub.add_argument("--eps", type=float, default=None)
    _add_common(sub, plot=True)
    sub.set_defaults(func=cmd_tropical)

    sub = subs.add_parser("amoeba", help="sample the amoeba of a complex curve")
    sub.add_argument("poly", help="complex polynomial file")
    sub.add_argument("--h", type=float, default=1.0)
    sub.add_argument("--samples", type=int, default=2000)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--log-radius", type=float, default=4.0)
    _add_common(sub, plot=True)
    sub.set_defaults(func=cmd_amoeba)

    sub = subs.add_parser(
        "converge", help="Hausdorff distance of the amoeba to the skeleton as h shrinks"
    )
    sub.add_argument("--curve", required=True, help="complex polynomial file")
    sub.add_argument("--tropical", required=True, help="tropical polynomial file")
    sub.add_argument("--h-list", required=True, help="comma-separated h values")
    sub.add_argument("--samples", type=int, default=2000)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--resolution", type=int, default=160)
    _add_common(sub, plot=True)
    sub.set_defaults(func=cmd_converge)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except TroposError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
