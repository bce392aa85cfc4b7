"""
Impact Vitality on single windows
=================================

How the indicator reacts to the shape of a citing-publication stream.
"""

# A window is a tuple of yearly counts, most recent year first.
from impact_vitality import CountsWindow, impact_vitality, impact_vitality_exact, iv_upper_bound

flat = CountsWindow(2006, (4, 4, 4, 4, 4))
rising = CountsWindow(2006, (9, 7, 5, 3, 1))
falling = CountsWindow(2006, (1, 3, 5, 7, 9))

for name, w in [("flat", flat), ("rising", rising), ("falling", falling)]:
    print(f"{name:8s} {w.counts}  IV = {impact_vitality(w).iv:.4f}"
          f"  exact = {impact_vitality_exact(w)}")

###############################################################################
# The value is bounded by what a window with every citing publication in the
# most recent year would score.

for n in (2, 3, 5, 10, 20):
    print(f"n={n:2d}  upper bound {iv_upper_bound(n):.4f}")

###############################################################################
# Nobody citing at all leaves the indicator undefined rather than zero.

print(impact_vitality(CountsWindow(2006, (0, 0, 0))))

###############################################################################
# Shifting one citing publication from the oldest to the most recent year,
# step by step, raises IV monotonically.

import matplotlib.pyplot as plt

counts = [0, 0, 0, 0, 10]
values = []
for step in range(11):
    values.append(impact_vitality(CountsWindow(2006, tuple(counts))).iv)
    if counts[-1]:
        counts[-1] -= 1
        counts[0] += 1

plt.plot(range(11), values, marker="o")
plt.axhline(1.0, color="grey", lw=0.8)
plt.xlabel("citing publications moved to the most recent year")
plt.ylabel("IV (n = 5)")
plt.show()
