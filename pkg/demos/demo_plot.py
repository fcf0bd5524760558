#!/usr/bin/env python3
"""Scatter of sampled states on the concurrence / linear-entropy plane.

Usage: python demo_plot.py SAMPLES_CSV CURVES_CSV OUT_IMAGE
"""
import csv
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

samples_csv, curves_csv, out_image = sys.argv[1], sys.argv[2], sys.argv[3]

pts = {"V_E": ([], []), "Zero_E": ([], []), "NV_E": ([], [])}
with open(samples_csv) as fh:
    for row in csv.DictReader(fh):
        if row["region"] in pts:
            pts[row["region"]][0].append(float(row["c"]))
            pts[row["region"]][1].append(float(row["s"]))

curves = {"c": [], "frontier": [], "s_l_minus": [], "s_l_plus": [], "nv_lower": []}
with open(curves_csv) as fh:
    for row in csv.DictReader(fh):
        for key in curves:
            curves[key].append(float(row[key]) if row[key] != "" else None)

fig, ax = plt.subplots(figsize=(7, 5))
style = {"V_E": ("tab:red", "violating"), "Zero_E": ("tab:gray", "mixed"),
          "NV_E": ("tab:blue", "non-violating")}
for region, (xs, ys) in pts.items():
    color, label = style[region]
    ax.scatter(xs, ys, s=2, alpha=0.4, color=color, label=f"{label} ({len(xs)})", linewidths=0)

def _plot(key, **kw):
    cs = [c for c, v in zip(curves["c"], curves[key]) if v is not None]
    vs = [v for v in curves[key] if v is not None]
    ax.plot(cs, vs, **kw)

_plot("frontier", color="black", lw=1.5, label="max-entanglement frontier")
_plot("s_l_minus", color="tab:green", lw=1.0)
_plot("s_l_plus", color="tab:green", lw=1.0)
_plot("nv_lower", color="tab:purple", lw=1.0, ls="--")

ax.set_xlabel("concurrence")
ax.set_ylabel("normalized linear entropy")
ax.set_xlim(0, 1)
ax.set_ylim(0, 1)
ax.legend(loc="upper right", fontsize=8)
fig.tight_layout()
fig.savefig(out_image, dpi=150)
print(f"wrote {out_image}")
