"""
Sensitivity to a single extra citing publication
================================================

Adds one citing publication to each year of a flat five-year window in turn
and reports how far IV moves.  The larger the yearly counts, the smaller the
effect of any single outlier.
"""

from impact_vitality import CitationTimeline, Moving, max_abs_perturbation, perturbation_report

t = CitationTimeline("demo", {y: 2 for y in range(2002, 2007)})
for row in perturbation_report(t, Moving(5), 2006):
    print(f"{row.year}  {row.iv_before.iv:.4f} -> {row.iv_after.iv:.4f}  ({row.difference:+.4f})")

###############################################################################
# Doubling the per-year count shrinks the worst-case effect.

for c in (1, 2, 4, 8, 16, 32, 64):
    t = CitationTimeline("demo", {y: c for y in range(2002, 2007)})
    print(f"c={c:3d}  max |delta IV| = {max_abs_perturbation(perturbation_report(t, Moving(5), 2006)):.5f}")
