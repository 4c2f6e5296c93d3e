"""Command line front end.

Commands operate on JSON files (see serialize for the formats) and print
either prose (--format text, the default) or key=value lines
(--format machine) with floats in shortest round-trip repr. Exit codes:
0 success, 1 a checked property failed or an operation is unsupported for
the inputs, 2 malformed input or bad flag values.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .distributions import Distribution
from .errors import InputError, OutOfRange, PMSpaceError
from .levy import DEFAULT_BISECT_TOL, levy_distance
from .lipschitz import (
    DEFAULT_ASSERT_TOL,
    check_one_lipschitz,
    lipschitz_envelope,
    solve_fixpoint,
)
from .serialize import (
    distribution_from_obj,
    distribution_to_obj,
    map_from_obj,
    read_json,
    self_map_from_obj,
    space_from_obj,
)
from .spaces import (
    metrization_report,
    neighborhood_matches_ball,
    strong_neighborhood,
    validate,
)
from .triangle import DEFAULT_ORACLE_GRID, Kind, TNorm, TriangleFunction, oracle_check

__all__ = ["main", "build_parser"]


@dataclass(frozen=True)
class RunConfig:
    format: str
    assert_tol: float
    bisect_tol: float
    grid: int

    def __post_init__(self) -> None:
        if self.grid < 2:
            raise OutOfRange(f"--grid must be >= 2, got {self.grid}")
        if not 0.0 < self.bisect_tol < self.assert_tol < 1.0:
            raise OutOfRange(
                "tolerances must satisfy 0 < bisect-tol < assert-tol < 1, got "
                f"bisect-tol={self.bisect_tol!r} assert-tol={self.assert_tol!r}"
            )


class Output:
    """Collects one run's lines; machine mode gets a flag-echo header."""

    def __init__(self, cfg: RunConfig, command: str) -> None:
        self.machine = cfg.format == "machine"
        self.lines: list[str] = []
        if self.machine:
            self.kv("command", command)
            self.kv("assert_tol", cfg.assert_tol)
            self.kv("bisect_tol", cfg.bisect_tol)
            self.kv("grid", cfg.grid)

    def kv(self, key: str, value: object) -> None:
        if isinstance(value, str):
            self.lines.append(f"{key}={value}")
        elif isinstance(value, (list, tuple, dict)):
            self.lines.append(f"{key}={json.dumps(value, separators=(',', ':'))}")
        else:
            self.lines.append(f"{key}={value!r}")

    def text(self, line: str) -> None:
        self.lines.append(line)

    def flush(self) -> None:
        for line in self.lines:
            print(line)


def _jumps(d: Distribution) -> list[list[float]]:
    return distribution_to_obj(d)["jumps"]


def _dist_lines(d: Distribution, indent: str = "  ") -> list[str]:
    if not d.locs:
        return [f"{indent}(no jumps: identically 0 below infinity)"]
    return [f"{indent}t={t!r} level={v!r}" for t, v in d.jumps]


def _cmd_validate(cfg: RunConfig, args: argparse.Namespace) -> int:
    space = space_from_obj(read_json(args.space))
    report = validate(space)
    out = Output(cfg, "validate")
    if out.machine:
        out.kv("points", len(space.points))
        out.kv("ok", report.ok)
        out.kv("violations", len(report.violations))
        for i, v in enumerate(report.violations):
            out.kv(f"violation_{i}", [v.axiom, list(v.points), v.detail])
    else:
        if report.ok:
            out.text(
                f"{args.space}: valid probabilistic metric space "
                f"({len(space.points)} points, {space.tf.kind.value} triangle function)"
            )
        else:
            out.text(f"{args.space}: INVALID ({len(report.violations)} violation(s))")
            for v in report.violations:
                pts = ", ".join(v.points)
                out.text(f"  {v.axiom} at ({pts}): {v.detail}")
    out.flush()
    return 0 if report.ok else 1


def _cmd_levy(cfg: RunConfig, args: argparse.Namespace) -> int:
    f = distribution_from_obj(read_json(args.f), args.f)
    g = distribution_from_obj(read_json(args.g), args.g)
    res = levy_distance(f, g, cfg.bisect_tol)
    out = Output(cfg, "levy")
    if out.machine:
        out.kv("value", res.value)
        out.kv("bracket_lo", res.bracket[0])
        out.kv("bracket_hi", res.bracket[1])
        out.kv("iterations", res.iterations)
    else:
        out.text(
            f"levy distance = {res.value!r} "
            f"(bracket [{res.bracket[0]!r}, {res.bracket[1]!r}], "
            f"{res.iterations} bisection steps)"
        )
    out.flush()
    return 0


def _cmd_star(cfg: RunConfig, args: argparse.Namespace) -> int:
    f = distribution_from_obj(read_json(args.f), args.f)
    g = distribution_from_obj(read_json(args.g), args.g)
    tf = TriangleFunction(kind=Kind(args.kind), tnorm=TNorm(args.tnorm))
    result = tf(f, g)
    check = oracle_check(tf, f, g, grid=cfg.grid)
    out = Output(cfg, "star")
    if out.machine:
        out.kv("kind", args.kind)
        out.kv("tnorm", args.tnorm)
        out.kv("jumps", _jumps(result))
        out.kv("oracle_ok", check.ok)
    else:
        out.text(
            f"star({args.kind}, {args.tnorm}) of {args.f} and {args.g}: "
            f"{len(result.locs)} jump(s)"
        )
        out.lines.extend(_dist_lines(result))
        out.text(
            f"oracle check (grid {cfg.grid}): {'ok' if check.ok else 'DISAGREES'}"
        )
        for m, lo, got, hi in check.violations[:5]:
            out.text(f"  at t={m!r}: oracle {got!r} outside [{lo!r}, {hi!r}]")
    out.flush()
    return 0 if check.ok else 1


def _cmd_report(cfg: RunConfig, args: argparse.Namespace) -> int:
    space = space_from_obj(read_json(args.space))
    rep = metrization_report(space, cfg.bisect_tol)
    out = Output(cfg, "report")
    pairs = space.pair_list()
    if out.machine:
        out.kv("points", len(space.points))
        out.kv("k", rep.k)
        out.kv("tol", rep.tol)
        out.kv("pairs", len(pairs))
        for idx, (x, y) in enumerate(pairs):
            i, j = space.index(x), space.index(y)
            out.kv(f"pair_{idx}", [x, y])
            out.kv(f"lower_{idx}", rep.lower[i][j])
            out.kv(f"sigma_{idx}", rep.sigma[i][j])
        out.kv("ok", rep.ok)
    else:
        out.text(
            f"metrization of {args.space} "
            f"({len(space.points)} points, k = {rep.k!r}, tol = {rep.tol!r}):"
        )
        for x, y in pairs:
            i, j = space.index(x), space.index(y)
            out.text(f"  {x},{y}: lower={rep.lower[i][j]!r} sigma={rep.sigma[i][j]!r}")
        if rep.ok:
            out.text("sandwich lower <= sigma <= k*lower holds on every pair")
        else:
            out.text(f"sandwich FAILED on {len(rep.violations)} pair(s):")
            for x, y, side, lhs, rhs in rep.violations:
                out.text(f"  {x},{y}: {side} with lhs={lhs!r} rhs={rhs!r}")
    out.flush()
    return 0 if rep.ok else 1


def _cmd_fixpoint(cfg: RunConfig, args: argparse.Namespace) -> int:
    space = space_from_obj(read_json(args.space))
    m = self_map_from_obj(read_json(args.map))
    cert = solve_fixpoint(
        space,
        m,
        args.q,
        args.x0,
        max_iter=args.max_iter,
        assert_tol=cfg.assert_tol,
        bisect_tol=cfg.bisect_tol,
    )
    out = Output(cfg, "fixpoint")
    if out.machine:
        out.kv("fixed_point", cert.fixed_point)
        out.kv("q", cert.q)
        out.kv("k", cert.k)
        out.kv("steps", len(cert.iterates) - 1)
        out.kv("iterates", list(cert.iterates))
        out.kv("bounds", list(cert.bounds))
        out.kv("achieved", list(cert.achieved))
        out.kv("ok", cert.ok)
    else:
        out.text(
            f"fixed point {cert.fixed_point!r} reached from {args.x0!r} "
            f"in {len(cert.iterates) - 1} step(s) (q = {cert.q!r}, k = {cert.k!r})"
        )
        for n, x in enumerate(cert.iterates):
            out.text(
                f"  n={n} at {x!r}: achieved={cert.achieved[n]!r} "
                f"bound={cert.bounds[n]!r}"
            )
        out.text(
            "rate certificate holds"
            if cert.ok
            else "rate certificate FAILED at some step"
        )
    out.flush()
    return 0 if cert.ok else 1


def _cmd_envelope(cfg: RunConfig, args: argparse.Namespace) -> int:
    space = space_from_obj(read_json(args.space))
    data = map_from_obj(read_json(args.map))
    subset = None
    if args.subset is not None:
        subset = tuple(s for s in (p.strip() for p in args.subset.split(",")) if s)
    env = lipschitz_envelope(space, data, subset)
    lip = check_one_lipschitz(space, env).ok
    out = Output(cfg, "envelope")
    if out.machine:
        out.kv("points", len(space.points))
        out.kv("subset", list(subset) if subset is not None else list(space.points))
        for label in env.labels:
            out.kv(f"value_{label}", _jumps(env.at(label)))
        out.kv("one_lipschitz", lip)
    else:
        shown = ", ".join(subset) if subset is not None else "all points"
        out.text(f"envelope of {args.map} over {shown}:")
        for label in env.labels:
            out.text(f"  {label}:")
            out.lines.extend(_dist_lines(env.at(label), "    "))
        out.text(f"result is 1-Lipschitz: {'yes' if lip else 'NO'}")
    out.flush()
    return 0 if lip else 1


def _cmd_neighborhood(cfg: RunConfig, args: argparse.Namespace) -> int:
    space = space_from_obj(read_json(args.space))
    members = strong_neighborhood(space, args.x, args.t)
    match = neighborhood_matches_ball(space, args.x, args.t, cfg.bisect_tol)
    verdict = "indeterminate" if match is None else repr(match)
    out = Output(cfg, "neighborhood")
    if out.machine:
        out.kv("x", args.x)
        out.kv("t", args.t)
        out.kv("members", list(members))
        out.kv("ball_match", verdict)
    else:
        shown = ", ".join(members) if members else "(empty)"
        out.text(f"strong {args.t!r}-neighborhood of {args.x!r}: {shown}")
        human = {"True": "yes", "False": "NO"}.get(verdict, verdict)
        out.text(f"matches the metric ball: {human}")
    out.flush()
    return 0 if match is not False else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "machine"), default="text",
        help="output style (default: text)",
    )
    common.add_argument(
        "--assert-tol", type=float, default=DEFAULT_ASSERT_TOL, metavar="TOL",
        help="slack for checked inequalities (default: %(default)s)",
    )
    common.add_argument(
        "--bisect-tol", type=float, default=DEFAULT_BISECT_TOL, metavar="TOL",
        help="Levy distance bracket width (default: %(default)s)",
    )
    common.add_argument(
        "--grid", type=int, default=DEFAULT_ORACLE_GRID, metavar="N",
        help="grid cells for the brute-force oracle (default: %(default)s)",
    )

    parser = argparse.ArgumentParser(
        prog="pmspace",
        description="exact computations in finite probabilistic metric spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the space axioms")
    p.add_argument("space", help="space JSON file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("levy", parents=[common], help="distance of two distributions")
    p.add_argument("f", help="distribution JSON file")
    p.add_argument("g", help="distribution JSON file")
    p.set_defaults(func=_cmd_levy)

    p = sub.add_parser(
        "star", parents=[common], help="apply a triangle function, oracle-checked"
    )
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("--tnorm", required=True, choices=[t.value for t in TNorm])
    p.add_argument("f", help="distribution JSON file")
    p.add_argument("g", help="distribution JSON file")
    p.set_defaults(func=_cmd_star)

    p = sub.add_parser(
        "report", parents=[common], help="canonical metric and sandwich bounds"
    )
    p.add_argument("space", help="space JSON file")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser(
        "fixpoint", parents=[common], help="iterate a contraction with certificates"
    )
    p.add_argument("space", help="space JSON file")
    p.add_argument("map", help="self-map JSON file")
    p.add_argument("--q", type=float, required=True, help="contraction factor")
    p.add_argument("--x0", required=True, help="starting point label")
    p.add_argument("--max-iter", type=int, default=64)
    p.set_defaults(func=_cmd_fixpoint)

    p = sub.add_parser(
        "envelope", parents=[common], help="1-Lipschitz envelope of point data"
    )
    p.add_argument("space", help="space JSON file")
    p.add_argument("map", help="distribution-valued map JSON file")
    p.add_argument("--subset", help="comma-separated labels (default: all points)")
    p.set_defaults(func=_cmd_envelope)

    p = sub.add_parser(
        "neighborhood", parents=[common], help="strong t-neighborhood of a point"
    )
    p.add_argument("space", help="space JSON file")
    p.add_argument("--x", required=True, help="center point label")
    p.add_argument("--t", type=float, required=True, help="radius in (0, 1]")
    p.set_defaults(func=_cmd_neighborhood)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            format=args.format,
            assert_tol=args.assert_tol,
            bisect_tol=args.bisect_tol,
            grid=args.grid,
        )
        return args.func(cfg, args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PMSpaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
