"""Randomized property suites: the library testing itself.

Each suite draws random instances and checks one family of laws, from
projection certificates to metric axioms for the certified Attouch-Wets
estimator.  Interval-based law checks that cannot be decided at the
certified widths are counted inconclusive, never silently passed.  The
same runner backs `hyperconvex verify` on the command line.
"""

import json

from hyperconvex import SUITE_NAMES, run_suite

print("Available suites:", ", ".join(SUITE_NAMES))
print()

plan = [
    ("projection-laws", 4, 40),
    ("gap-complement", 5, 60),
    ("gap-sandwich", 3, 25),
    ("aw-origin-equivalence", 2, 12),
    ("independence", 3, 20),
    ("simplex-stability", 3, 15),
]

print(f"{'suite':26s} {'dim':>3s} {'trials':>6s} {'failures':>8s} {'inconclusive':>12s} {'ms':>6s}")
for name, dim, trials in plan:
    report = run_suite(name, dim, trials, seed=2026)
    print(
        f"{name:26s} {dim:3d} {report.trials:6d} {len(report.failures):8d} "
        f"{report.inconclusive:12d} {report.runtime_ms:6d}"
    )
print()

print("Reports serialize to JSON for archiving; reruns with the same seed")
print("are byte-identical apart from the runtime field:")
report = run_suite("gap-oracle", 3, 10, seed=5)
doc = report.to_dict()
doc["runtime_ms"] = 0
print(json.dumps(doc, indent=2)[:400])
