"""Command-line front end: benchmark runner, interpolation, validation, plots.

Exit codes: 0 success / all checks passed; 1 a verdict was PROBLEM or a
benchmark expectation was missed; 2 usage or input errors.
"""
from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from .benchmark import builtin_cases, compare_reference, run_case, sweep_oracle
from .errors import FriError
from .interpolate import (
    assemble_conclusion,
    kh_characteristic_points,
    khstab_points,
    select_flanking,
)
from .normality import Segment, Verdict, direct_normality, full_report
from .plotting import render_interpolation_svg
from .rulebase_io import load_document, to_rulebase
from .sets import GradedPointList, TrapezoidSet

_VERDICT_HEADERS = {Segment.LTB: "LFBound", Segment.CORE: "Core", Segment.RTB: "RFBound"}


def _fmt(value: float | str, decimals: int) -> str:
    if isinstance(value, str):
        return value
    return f"{round(value, decimals):g}"


def _fmt_points(points, decimals: int) -> str:
    return "(" + ", ".join(_fmt(p, decimals) for p in points) + ")"


def _print_verdict_block(report, out, decimals: int) -> None:
    for seg in Segment:
        verdict = report.length_for(seg).verdict
        print(f"The length ({_VERDICT_HEADERS[seg]}) is ({verdict.value})", file=out)
    for seg in Segment:
        diag = report.length_for(seg)
        op = "<=" if diag.verdict is Verdict.NORMAL else ">"
        print(
            f"{seg.name}: {diag.path.value}, {_fmt(diag.length1, decimals)} {op} "
            f"{_fmt(diag.length2, decimals)}, {diag.verdict.value}",
            file=out,
        )
    for seg in Segment:
        diag = report.ratio_for(seg)
        if diag.verdict is Verdict.UNDEFINED:
            print(f"{seg.name} ratio: UNDEFINED (zero denominator)", file=out)
        else:
            op = "<=" if diag.verdict is Verdict.NORMAL else ">"
            print(
                f"{seg.name} ratio: {_fmt(diag.ratio1, decimals)} {op} "
                f"{_fmt(diag.ratio2, decimals)}, {diag.verdict.value}",
                file=out,
            )
    tags = ", ".join(sorted(t.value for t in report.tags)) or "(none)"
    print(f"case tags: {tags}", file=out)
    print(f"overall: {report.overall.value}", file=out)


def cmd_bench(args: argparse.Namespace) -> int:
    cases = builtin_cases()
    if args.case is not None:
        cases = tuple(c for c in cases if c.case_id == args.case)
    reports = [run_case(c) for c in cases]
    rows = []
    for case, report in zip(cases, reports):
        status = "pass" if report.passed else "FAIL"
        print(f"Case {case.case_id} ({case.name}): {status}")
        point_checks = [c for c in report.checks if c.name.startswith("point_y")]
        computed = tuple(c.computed for c in point_checks)
        expected = tuple(c.expected for c in point_checks)
        dev = max(c.deviation for c in point_checks)
        print(
            f"  points computed={_fmt_points(computed, args.decimals)} "
            f"expected={_fmt_points(expected, args.decimals)} "
            f"max|dev|={_fmt(dev, args.decimals)}"
        )
        for check in report.checks:
            seg = check.segment.name if check.segment is not None else "-"
            rows.append(
                (
                    case.case_id,
                    seg,
                    check.name,
                    repr(check.computed) if isinstance(check.computed, float) else check.computed,
                    repr(check.expected) if isinstance(check.expected, float) else check.expected,
                    "" if check.deviation is None else repr(check.deviation),
                    "pass" if check.passed else "fail",
                )
            )
            if not check.passed:
                print(
                    f"  MISMATCH {seg}/{check.name}: computed={check.computed} "
                    f"expected={check.expected}"
                )
        for seg in Segment:
            named = {c.name: c for c in report.checks if c.segment is seg}
            print(
                f"  {seg.name:4} {named['path'].computed:15} "
                f"lengths ({_fmt(named['length1'].computed, args.decimals)}, "
                f"{_fmt(named['length2'].computed, args.decimals)}) "
                f"verdict {named['length_verdict'].computed} "
                f"(expected {named['length_verdict'].expected})"
            )
        if args.sweep:
            oracle = sweep_oracle(
                case.rule_lower, case.rule_upper, case.observation, n_levels=args.sweep
            )
            overall = next(c for c in report.checks if c.name == "overall")
            agrees = oracle.abnormal == (overall.computed == Verdict.PROBLEM.value)
            print(
                f"  sweep({args.sweep}): min_gap={_fmt(oracle.min_gap, args.decimals)} "
                f"at level {_fmt(oracle.gap_argmin, args.decimals)}, "
                f"nested={'yes' if oracle.inf_monotone and oracle.sup_monotone else 'no'}, "
                f"abnormal={'yes' if oracle.abnormal else 'no'}, "
                f"agrees_with_verdict={'yes' if agrees else 'NO'}"
            )
        for ref in compare_reference(case):
            if ref.computed_points is None:
                shown = ref.note or _fmt_points(ref.expected_points, args.decimals)
                print(f"  reference {ref.method}: {ref.label} {shown} (reference only)")
            else:
                print(
                    f"  reference {ref.method}: {ref.label} "
                    f"{_fmt_points(ref.expected_points, args.decimals)} "
                    f"computed {_fmt_points(ref.computed_points, args.decimals)} "
                    f"{'pass' if ref.passed else 'FAIL'}"
                )
    n_passed = sum(1 for r in reports if r.passed)
    print(f"{n_passed}/{len(reports)} cases passed")
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow(
                ("case_id", "segment", "metric", "computed", "expected", "deviation", "pass")
            )
            writer.writerows(rows)
        print(f"wrote {len(rows)} rows to {args.csv}")
    return 0 if n_passed == len(reports) else 1


def _load(path: str):
    data = Path(path).read_bytes()
    return load_document(data)


def cmd_interpolate(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    rulebase, observation = to_rulebase(doc)
    if observation is None:
        print("error: document has no observation", file=sys.stderr)
        return 2
    lower, upper = select_flanking(rulebase, observation)
    if args.method == "khstab":
        points = khstab_points(rulebase, observation, exponent=1.0)
    else:
        points = kh_characteristic_points(lower, upper, observation)
    print(f"method: {args.method}")
    print(f"conclusion points: {_fmt_points(points.as_tuple(), args.decimals)}")
    shape = assemble_conclusion(points)
    if isinstance(shape, TrapezoidSet):
        print(f"conclusion: trapezoid {_fmt_points(shape.points(), args.decimals)}")
    else:
        graded = " ".join(
            f"({_fmt(x, args.decimals)}, {_fmt(g, args.decimals)})" for x, g in shape
        )
        print(f"conclusion: ABNORMAL, graded points {graded}")
    if rulebase.dimension == 1:
        report = full_report(lower, upper, observation)
        _print_verdict_block(report, sys.stdout, args.decimals)
        problem = report.overall is Verdict.PROBLEM
    else:
        verdicts = direct_normality(points)
        for seg, verdict in verdicts.items():
            print(f"{seg.name}: {verdict.value} (direct)")
        problem = any(v is Verdict.PROBLEM for v in verdicts.values())
    if args.sweep:
        oracle = sweep_oracle(lower, upper, observation, n_levels=args.sweep)
        print(
            f"sweep({args.sweep}): min_gap={_fmt(oracle.min_gap, args.decimals)} "
            f"at level {_fmt(oracle.gap_argmin, args.decimals)}, "
            f"inf_monotone={oracle.inf_monotone}, sup_monotone={oracle.sup_monotone}, "
            f"abnormal={'yes' if oracle.abnormal else 'no'}"
        )
    return 1 if problem else 0


def cmd_validate(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    rulebase, observation = to_rulebase(doc)
    if observation is None:
        print("error: document has no observation", file=sys.stderr)
        return 2
    if rulebase.dimension != 1:
        print("error: validation diagnostics are defined for dimension 1", file=sys.stderr)
        return 2
    lower, upper = select_flanking(rulebase, observation)
    report = full_report(lower, upper, observation)
    name = doc.metadata.get("name")
    if name:
        print(name)
    print(f"conclusion points: {_fmt_points(report.points.as_tuple(), args.decimals)}")
    _print_verdict_block(report, sys.stdout, args.decimals)
    return 1 if report.overall is Verdict.PROBLEM else 0


def cmd_plot(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    rulebase, observation = to_rulebase(doc)
    if observation is None:
        print("error: document has no observation", file=sys.stderr)
        return 2
    if rulebase.dimension != 1:
        print("error: plotting is defined for dimension 1", file=sys.stderr)
        return 2
    lower, upper = select_flanking(rulebase, observation)
    points = kh_characteristic_points(lower, upper, observation)
    y = points.as_tuple()
    graded = GradedPointList(((y[0], 0.0), (y[1], 1.0), (y[2], 1.0), (y[3], 0.0)))
    svg = render_interpolation_svg(lower, upper, observation, graded)
    Path(args.out).write_bytes(svg.encode("utf-8"))
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fri-lab",
        description=(
            "Inverse-distance fuzzy rule interpolation with conclusion-normality "
            "diagnostics and an embedded golden benchmark."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bench = sub.add_parser("bench", help="run the embedded benchmark cases")
    bench.add_argument("--case", type=int, choices=range(1, 10), metavar="N",
                       help="run a single case (1-9)")
    bench.add_argument("--csv", metavar="PATH", help="write per-check rows as CSV")
    bench.add_argument("--sweep", type=int, metavar="N",
                       help="also run the dense sweep oracle at N levels")
    bench.add_argument("--decimals", type=int, default=4,
                       help="decimals for rendered numbers (default 4)")
    bench.set_defaults(func=cmd_bench)

    interp = sub.add_parser("interpolate", help="interpolate a rule-base document")
    interp.add_argument("file", help="rule-base document (JSON)")
    interp.add_argument("--method", choices=("kh", "khstab"), default="kh")
    interp.add_argument("--sweep", type=int, metavar="N",
                        help="also run the dense sweep oracle at N levels")
    interp.add_argument("--decimals", type=int, default=4)
    interp.set_defaults(func=cmd_interpolate)

    validate = sub.add_parser("validate", help="run normality diagnostics on a document")
    validate.add_argument("file", help="rule-base document (JSON)")
    validate.add_argument("--decimals", type=int, default=4)
    validate.set_defaults(func=cmd_validate)

    plot = sub.add_parser("plot", help="render an interpolation as SVG")
    plot.add_argument("file", help="rule-base document (JSON)")
    plot.add_argument("-o", "--out", required=True, help="output SVG path")
    plot.set_defaults(func=cmd_plot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FriError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
