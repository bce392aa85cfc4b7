"""
Classifying a cohort
====================

IV_PhD series for the bundled synthetic cohort, and the cross-tabulation of
the selection outcome against "IV_PhD >= 1 for all years".
"""

from impact_vitality import (
    Anchored,
    Moving,
    classify,
    contingency_table,
    iv_series,
    load_fixture_cohort,
)

cohort = load_fixture_cohort()

###############################################################################
# One series per researcher, anchored at the PhD year.  The PhD year itself
# would give a one-year window, so each series starts the year after.

for profile, timeline in cohort:
    s = iv_series(timeline, Anchored(profile.phd_year), profile.phd_year + 1, 2006)
    c = classify(s)
    low = min(v for v in s.values if v is not None)
    print(f"{profile.researcher_id}  {profile.selected.value:12s} "
          f"{c.vitality.value:16s} min IV_PhD {low:.3f}")

###############################################################################
# The 2x2 table.

table = contingency_table(cohort, y_to=2006)
print()
print("              all >= 1   dip")
print(f"Selected      {table.selected_all:8d}   {table.selected_below:3d}")
print(f"NotSelected   {table.not_selected_all:8d}   {table.not_selected_below:3d}")

###############################################################################
# The same cohort under a five-year moving window instead.

print(contingency_table(cohort, Moving(5), y_to=2006).cells, "(moving, n=5)")
