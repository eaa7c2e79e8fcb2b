"""End-to-end identity verification.

The headline check: the generating series of Chern-polynomial integrals,
computed by localization over fixed points, equals the eigenfunction tail
convolved with the (m+1)-st inverse power of the denominator product --
coefficient by coefficient, exactly, at every sampled rational point.  Its
degenerate companion compares equivariant volumes with the Toda series.

The same reports are available from the command line:

    quasiflags verify-main --n 3 --max-degree 4 --trials 5 --seed 1
    quasiflags verify-toda --n 2 --max-degree 6 --trials 5 --seed 2
    quasiflags properties --n 3 --max-degree 4 --seed 3
"""

import json

from quasiflags import run_properties, verify_main, verify_toda

print("== chern series vs eigenfunction product, n=3 through degree 4 ==")
report = verify_main(3, 4, trials=3, seed=20260809)
print("verdict:", report["verdict"])
trial = report["trials"][0]
print("first sampled point:", trial["point"], f"(resampled {trial['resamples']}x)")
for row in trial["comparisons"][:6]:
    print(f"  degree ({row['gamma']}): lhs {row['lhs']} == rhs {row['rhs']} -> {row['equal']}")
print(f"  ... {len(trial['comparisons'])} coefficients compared per point")

print()
print("== volumes vs Toda series, n=2 through degree 6 ==")
toda_report = verify_toda(2, 6, trials=3, seed=31415)
print("verdict:", toda_report["verdict"])
diag = toda_report["trials"][0]["limit_diagnostics"][0]
print("limit diagnostic at degree", diag["gamma"], "-> ratios", diag["ratios"],
      "target", diag["target"])

print()
print("== the cross-module property suite ==")
prop_report = run_properties(3, 3, seed=999)
for record in prop_report["records"]:
    print(f"  [{'ok' if record['passed'] else 'FAIL'}] {record['name']}")
print("verdict:", prop_report["verdict"])

print()
print("reports are deterministic: same seed, same bytes")
again = verify_main(3, 4, trials=3, seed=20260809)
print("byte-identical:",
      json.dumps(report, sort_keys=True) == json.dumps(again, sort_keys=True))
