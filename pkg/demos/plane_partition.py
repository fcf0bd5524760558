#!/usr/bin/env python3
"""The concurrence / linear-entropy plane and its three-way partition.

For every point under the max-entanglement frontier the quadratic entropic
inequality either holds for all states with those coordinates (NV), fails
for all of them (V), or the coordinates are ambiguous (Zero).  This script
walks the boundary curves, classifies a few points, and reproduces the
region percentages, then does the same for the CHSH criterion.

Run: python demos/plane_partition.py
"""
import entroplane as ep
from entroplane.plane import RegionLabel, level_set_y_intervals, e0_params_on_level

print("boundary curves")
for c in (0.2, 0.5, 2 / 3, 0.707):
    row = [f"c={c:.3f}", f"frontier={ep.frontier_mems(c):.4f}"]
    if c <= 0.7071:
        row.append(f"S_L-={ep.s_l_minus(c):.4f}")
        row.append(f"S_L+={ep.s_l_plus(c):.4f}")
    print("   " + "  ".join(row))
print()

print("classification samples")
for c, s in [(0.75, 0.3), (0.3, 0.7), (0.3, 0.2), (0.5, 0.9), (0.05, 0.95)]:
    print(f"   (c={c}, s={s}) -> entropic {ep.classify_entropic((c, s)).value:12s}", end="")
    try:
        print(f" chsh {ep.classify_chsh((c, s)).value}")
    except ep.NoLevelSetError:
        print(" chsh (no family state there)")
print()

# In the ambiguous region both verdicts coexist at the same coordinates:
# walk the level set and show a violating and a non-violating state.
c, s = 0.3, 0.4
print(f"level set at (c={c}, s={s}), region {ep.classify_entropic((c, s)).value}:")
for ylo, yhi in level_set_y_intervals(c, s):
    for y in (ylo, yhi):
        for sign in (1, -1):
            p = e0_params_on_level(c, s, y, sign)
            gap = ep.entropic_violation(ep.e0_state(p)).gap_a
            print(f"   a={p.a:.4f} b={p.b:.4f}: gap_a = {gap:+.5f} -> {'violates' if gap > 0 else 'satisfies'}")
print()

print("region areas (percent of the physical region)")
ent = ep.entropic_region_areas(1e-10)
chsh = ep.chsh_region_areas(resolution=400)
for label in (RegionLabel.V_E, RegionLabel.ZERO_E, RegionLabel.NV_E):
    print(f"   {label.value:12s} entropic {ent.percentages[label]:7.3f}%   chsh {chsh.percentages[label]:7.3f}%")
print(f"   total physical area = {ent.total_area:.10f} (= 52/81)")
print()
print("The entropic criterion certifies entanglement on a strictly larger")
print("region than CHSH, and fails to certify on a strictly smaller one.")
