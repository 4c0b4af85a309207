"""
Where the literal formulas go wrong
===================================

The explicit orbit-count formulas are exposed in two modes.  ``printed``
follows the published expressions literally; ``corrected`` carries the fixes
found by comparing against brute force.  The reconciliation report shows
which terms account for each disagreement.
"""

from polydissect.orbits import formula, reconcile

for n, k in [(6, 3), (5, 2), (8, 2)]:
    for report in reconcile(n, k):
        printed = formula(n, k, report.group, "printed")
        print(f"n={n} k={k} {report.group:<8} true={report.value} printed={printed}")
        for method, note in report.notes.items():
            print("   ", method, "->", note)
