"""Command-line front end.

Subcommands: region, pentagon, validate, sweep. Exit codes: 0 success,
1 a validation tolerance check failed, 2 usage or input error, 3 output
write failure. Randomized commands default to seed 0 and say so, so every
published artifact is reproducible from its manifest.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import __version__, bounds, mcsim, waterfill
from .emit import (
    atomic_write_text,
    fmt_float,
    render_curves_svg,
    write_csv,
    write_manifest,
)
from .mcsim import ExperimentPreconditionError, McReport, WaveformSpec
from .scenario import (
    Scenario,
    ScenarioError,
    db_to_linear,
    derive_link_budget,
    load_scenario,
    replace_scenario_field,
)

REGION_CSV_HEADER = (
    "curve_label",
    "alpha_or_nan",
    "r_est_bps",
    "r_com_bps",
    "self_consistent",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mudr",
        description="Joint radar-communications rate bounds and validations.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    out_kwargs = dict(
        default=None,
        help="output directory (default: $MUDR_OUT or current directory)",
    )

    p_region = sub.add_parser("region", help="compute the rate-region curves")
    p_region.add_argument("--scenario", required=True, help="scenario JSON path")
    p_region.add_argument(
        "--alpha-points",
        type=int,
        default=400,
        help="number of bandwidth-split grid points (default 400)",
    )
    p_region.add_argument("--out", **out_kwargs)

    p_pent = sub.add_parser(
        "pentagon", help="two-user multiple-access pentagon from SNRs in dB"
    )
    p_pent.add_argument("snr1_db", type=float)
    p_pent.add_argument("snr2_db", type=float)
    p_pent.add_argument("--out", **out_kwargs)

    p_val = sub.add_parser("validate", help="run a seeded Monte Carlo validation")
    p_val.add_argument("--scenario", required=True, help="scenario JSON path")
    p_val.add_argument(
        "--experiment", required=True, choices=("crb", "residual", "gamma")
    )
    p_val.add_argument("--trials", type=int, default=10000)
    p_val.add_argument("--seed", type=int, default=None)
    p_val.add_argument("--out", **out_kwargs)

    p_sweep = sub.add_parser("sweep", help="sweep one scenario field over values")
    p_sweep.add_argument("--scenario", required=True, help="scenario JSON path")
    p_sweep.add_argument("--vary", required=True, help="scenario field to vary")
    p_sweep.add_argument(
        "--values", required=True, help="comma-separated list of numbers"
    )
    p_sweep.add_argument("--alpha-points", type=int, default=400)
    p_sweep.add_argument("--out", **out_kwargs)

    return parser


def _out_dir(arg: str | None) -> Path:
    out = Path(arg if arg is not None else os.environ.get("MUDR_OUT", "."))
    out.mkdir(parents=True, exist_ok=True)
    return out


def _region_rows(scenario: Scenario, alpha_points: int):
    """Curves for plotting plus CSV rows (waterfill rows keep every grid
    point, flagged by self-consistency)."""
    lb = derive_link_budget(scenario)
    grid = waterfill.default_alpha_grid(alpha_points)
    curves = bounds.rate_region(lb, grid)
    wf_all = waterfill.waterfill_points(lb, grid)

    rows: list[list[str]] = []
    for curve in curves:
        if curve.label == "waterfill":
            for p in wf_all:
                rows.append(
                    [
                        "waterfill",
                        fmt_float(p.split.alpha),
                        fmt_float(p.r_est),
                        fmt_float(p.r_com_total),
                        "true" if p.self_consistent else "false",
                    ]
                )
        else:
            for pt in curve.points:
                rows.append(
                    [
                        curve.label,
                        "nan",
                        fmt_float(pt.r_est),
                        fmt_float(pt.r_com),
                        "true",
                    ]
                )
    return curves, rows


def _write_region_files(out: Path, prefix: str, curves, rows) -> list[str]:
    csv_name = f"{prefix}.csv"
    svg_name = f"{prefix}.svg"
    write_csv(out / csv_name, REGION_CSV_HEADER, rows)
    svg = render_curves_svg(
        [(c.label, [(p.r_est, p.r_com) for p in c.points]) for c in curves],
        x_label="estimation rate (bits/s)",
        y_label="communications rate (bits/s)",
    )
    atomic_write_text(out / svg_name, svg)
    return [csv_name, svg_name]


def cmd_region(args: argparse.Namespace) -> int:
    try:
        scenario = load_scenario(args.scenario)
        if args.alpha_points < 1:
            raise ValueError("--alpha-points must be at least 1")
        curves, rows = _region_rows(scenario, args.alpha_points)
    except (ScenarioError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        out = _out_dir(args.out)
        outputs = _write_region_files(out, "region", curves, rows)
        outputs.append("manifest.json")
        write_manifest(
            out / "manifest.json",
            command="region",
            scenario_path=str(args.scenario),
            parameters={"alpha_points": args.alpha_points},
            outputs=outputs,
            tool_version=__version__,
            seed=None,
        )
    except OSError as exc:
        print(f"write error: {exc}", file=sys.stderr)
        return 3
    return 0


def cmd_pentagon(args: argparse.Namespace) -> int:
    try:
        if not (math.isfinite(args.snr1_db) and math.isfinite(args.snr2_db)):
            raise ValueError("SNRs must be finite dB values")
        region = bounds.ma_pentagon(
            db_to_linear(args.snr1_db), db_to_linear(args.snr2_db)
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    va, vb = region.vertex_a, region.vertex_b
    boundary = [
        (0.0, 0.0),
        (0.0, region.r2_max),
        va,
        vb,
        (region.r1_max, 0.0),
        (0.0, 0.0),
    ]
    lines = [
        ("r1_max", [(region.r1_max, 0.0), (region.r1_max, region.r2_max)]),
        ("r2_max", [(0.0, region.r2_max), (region.r1_max, region.r2_max)]),
        ("sum_max", [(0.0, region.sum_max), (region.sum_max, 0.0)]),
    ]
    rows = [["vertex_a", fmt_float(va[0]), fmt_float(va[1])],
            ["vertex_b", fmt_float(vb[0]), fmt_float(vb[1])]]
    for x, y in boundary:
        rows.append(["boundary", fmt_float(x), fmt_float(y)])
    for label, pts in lines:
        for x, y in pts:
            rows.append([label, fmt_float(x), fmt_float(y)])

    try:
        out = _out_dir(args.out)
        write_csv(out / "pentagon.csv", ("label", "r1_bits", "r2_bits"), rows)
        svg = render_curves_svg(
            [("boundary", boundary)] + lines,
            x_label="user 1 rate (bits/use)",
            y_label="user 2 rate (bits/use)",
        )
        atomic_write_text(out / "pentagon.svg", svg)
        write_manifest(
            out / "manifest.json",
            command="pentagon",
            scenario_path=None,
            parameters={"snr1_db": args.snr1_db, "snr2_db": args.snr2_db},
            outputs=["pentagon.csv", "pentagon.svg", "manifest.json"],
            tool_version=__version__,
            seed=None,
        )
    except OSError as exc:
        print(f"write error: {exc}", file=sys.stderr)
        return 3
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    seed = args.seed
    if seed is None:
        seed = 0
        print("no --seed given; using seed 0")
    try:
        scenario = load_scenario(args.scenario)
        lb = derive_link_budget(scenario)
        spec = WaveformSpec()
        if args.experiment == "crb":
            report = mcsim.crb_experiment(lb, spec, args.trials, seed)
        elif args.experiment == "residual":
            report = mcsim.residual_experiment(lb, spec, args.trials, seed)
        else:
            report = mcsim.gamma_experiment(spec, args.trials, seed)
    except ExperimentPreconditionError as exc:
        print(f"precondition not met: {exc}", file=sys.stderr)
        return 2
    except (ScenarioError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        out = _out_dir(args.out)
        report_name = f"validate_{args.experiment}.json"
        _write_report(out / report_name, report)
        write_manifest(
            out / "manifest.json",
            command="validate",
            scenario_path=str(args.scenario),
            parameters={"experiment": args.experiment, "trials": args.trials},
            outputs=[report_name, "manifest.json"],
            tool_version=__version__,
            seed=seed,
        )
    except OSError as exc:
        print(f"write error: {exc}", file=sys.stderr)
        return 3
    status = "pass" if report.passed else "FAIL"
    print(
        f"{args.experiment}: empirical={report.empirical!r} "
        f"analytic={report.analytic!r} rel_error={report.rel_error:.4g} "
        f"tolerance={report.tolerance} -> {status}"
    )
    return 0 if report.passed else 1


def _write_report(path: Path, report: McReport) -> None:
    atomic_write_text(path, json.dumps(report.to_json_dict(), indent=2) + "\n")


def cmd_sweep(args: argparse.Namespace) -> int:
    try:
        scenario = load_scenario(args.scenario)
        values = [float(v) for v in args.values.split(",") if v.strip() != ""]
        if not values:
            raise ValueError("--values must contain at least one number")
        variants = [
            replace_scenario_field(scenario, args.vary, v) for v in values
        ]
        results = []
        for value, variant in zip(values, variants):
            lb = derive_link_budget(variant)
            curves, rows = _region_rows(variant, args.alpha_points)
            results.append((value, lb, curves, rows))
    except (ScenarioError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        out = _out_dir(args.out)
        outputs = []
        summary_rows = []
        for i, (value, lb, curves, rows) in enumerate(results):
            outputs.extend(_write_region_files(out, f"sweep_{i:03d}_region", curves, rows))
            summary_rows.append(
                [
                    fmt_float(value),
                    fmt_float(bounds.est_outer_rate(lb)),
                    fmt_float(bounds.comms_outer_rate(lb)),
                    fmt_float(bounds.sic_comms_rate(lb)),
                ]
            )
        write_csv(
            out / "sweep_summary.csv",
            ("value", "est_outer_rate_bps", "comms_outer_rate_bps", "sic_comms_rate_bps"),
            summary_rows,
        )
        outputs.append("sweep_summary.csv")
        outputs.append("manifest.json")
        write_manifest(
            out / "manifest.json",
            command="sweep",
            scenario_path=str(args.scenario),
            parameters={
                "vary": args.vary,
                "values": values,
                "alpha_points": args.alpha_points,
            },
            outputs=outputs,
            tool_version=__version__,
            seed=None,
        )
    except OSError as exc:
        print(f"write error: {exc}", file=sys.stderr)
        return 3
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "region": cmd_region,
        "pentagon": cmd_pentagon,
        "validate": cmd_validate,
        "sweep": cmd_sweep,
    }
    return handlers[args.command](args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
