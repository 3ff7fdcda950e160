#!/usr/bin/env python3
# Draw the (eta, v) plane as text: where each pattern kind exists, where
# CHSH rules every local model out, and the gap in between.

from singlet_lhv import region_scan

ETA_STEPS = 40
V_STEPS = 21

rows = region_scan(ETA_STEPS, V_STEPS)
by_point = {(r.eta, r.v): r for r in rows}

# one character per grid point:
#   S  both symmetrized kinds feasible
#   L  only the staircase: the sinusoidal gap band
#   X  CHSH violated
#   g  neither kind yet CHSH satisfied (empty: the staircase frontier IS
#      the CHSH line, so nothing fits between them)
def glyph(r):
    if r.sin_feasible:
        return "S"
    if r.line_feasible:
        return "L"
    if r.chsh_violated:
        return "X"
    return "g"

print("v")
for j in range(V_STEPS - 1, -1, -1):
    v = j / (V_STEPS - 1)
    line = "".join(
        glyph(by_point[(i / ETA_STEPS, v)]) for i in range(1, ETA_STEPS + 1)
    )
    print(f"{v:4.2f} {line}")
print("     " + "-" * ETA_STEPS)
label = "".join(
    f"{i / ETA_STEPS:.1f}".lstrip("0") if i % 8 == 0 else " "
    for i in range(1, ETA_STEPS + 1)
)
print("     " + label + "  eta")

counts = {"S": 0, "L": 0, "g": 0, "X": 0}
for r in rows:
    counts[glyph(r)] += 1
total = len(rows)
print(f"\n{total} grid points: {counts['S']} sinusoidal-feasible, "
      f"{counts['L']} in the gap band (staircase only), "
      f"{counts['X']} CHSH-violated, {counts['g']} unreachable")

# the point called out in the map above: full efficiency, v = 0.65
from singlet_lhv import classify_region

r = classify_region(1.0, 0.65)
print(f"\nclassify_region(1.0, 0.65): sin_feasible={r.sin_feasible} "
      f"line_feasible={r.line_feasible} chsh_violated={r.chsh_violated} "
      f"gap={r.gap}")
print("a point no sinusoidal pattern covers, yet CHSH cannot exclude")
