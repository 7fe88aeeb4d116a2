"""Walkthrough: the embedded golden benchmark and the dense sweep oracle.

Nine fixed cases pin the engine to published expectations: cases 1-5 are
normal, cases 6-9 invert at least one segment. The sweep oracle re-derives
each verdict independently by sampling the conclusion's interval family at
1001 levels and checking gaps and nesting.

Run from the repository root:  python demos/04_benchmark_and_sweep.py
"""
from fri_lab import builtin_cases, compare_reference, run_all, sweep_oracle

report = run_all()
print(f"benchmark: {report.n_passed}/{report.n_cases} cases pass")
for case_report in report.case_reports:
    print(f"  case {case_report.case_id} ({case_report.name}): "
          f"{'pass' if case_report.passed else 'FAIL'}")

print("\nsweep oracle per case:")
for case in builtin_cases():
    oracle = sweep_oracle(case.rule_lower, case.rule_upper, case.observation)
    kind = "abnormal" if oracle.abnormal else "normal  "
    print(
        f"  case {case.case_id}: {kind} min_gap={oracle.min_gap:8.4f} "
        f"at level {oracle.gap_argmin:5.3f}, nested="
        f"{'yes' if oracle.inf_monotone and oracle.sup_monotone else 'no'}"
    )

print("\nmethod-comparison rows for case 9:")
case9 = next(c for c in builtin_cases() if c.case_id == 9)
for row in compare_reference(case9):
    if row.computed_points is None:
        print(f"  {row.method:7} {row.label:11} {row.expected_points or row.note} "
              f"(reference only)")
    else:
        print(f"  {row.method:7} {row.label:11} {row.expected_points} "
              f"computed {tuple(round(v, 4) for v in row.computed_points)}")

print("\nprovenance notes:")
for case in builtin_cases():
    if "reconstructed" in case.provenance_note:
        print(f"  case {case.case_id}: {case.provenance_note}")
