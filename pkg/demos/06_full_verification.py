"""Run every check over the standard catalog and summarize the outcome.

Run:  python3 demos/06_full_verification.py
"""

import time
from collections import Counter

from sylowlab import standard_catalog, theorem_suite

start = time.perf_counter()
totals: Counter = Counter()
failures = []
groups = standard_catalog(24)
for name, group in groups:
    for report in theorem_suite(group):
        totals[report.theorem_id] += 1
        if not report.passed:
            failures.append(report)
elapsed = time.perf_counter() - start

print(f"verified {len(groups)} catalog groups in {elapsed:.1f}s")
print(f"{sum(totals.values())} reports across {len(totals)} check kinds:")
for theorem_id, count in sorted(totals.items()):
    print(f"  {theorem_id:12s} {count:5d}")
print(f"failures: {len(failures)}")
for report in failures:
    print("  " + report.text_line())
