#!/usr/bin/env python3
"""The first MEMS branch: always caught by the entropic test, never by CHSH.

Maximally entangled mixed states with concurrence between 2/3 and 1/sqrt(2)
sit on the frontier of the physical region.  Along that stretch the
quadratic entropic gap (3/2)c^2 - c stays positive while the best CHSH value
2*sqrt(2)*c stays at or below 2, so the nonlinear criterion certifies
entanglement everywhere on the branch and CHSH certifies none of it.

Run: python demos/mems_branch_vs_chsh.py
"""
import numpy as np

import entroplane as ep

lo, hi = 2 / 3, 1 / np.sqrt(2)
print(f"scanning the branch c in ({lo:.4f}, {hi:.4f}]")
print(f"{'c':>8s} {'S_L':>8s} {'gap_a':>10s} {'chsh':>8s}  entropic  chsh")

grid = np.linspace(lo + 1e-4, hi, 12)
for c in grid:
    rho = ep.mems1(c)
    s = ep.linear_entropy(rho)
    gap = ep.entropic_violation(rho).gap_a
    chsh = ep.chsh_max(rho)
    print(f"{c:8.4f} {s:8.4f} {gap:+10.6f} {chsh:8.5f}  "
          f"{'violated ' if gap > 0 else 'satisfied'}  "
          f"{'violated' if chsh > 2 else 'satisfied'}")

# And the exhaustive version of the same statement:
cs = np.linspace(lo + 1e-9, hi, 100_000)
gaps = 1.5 * cs**2 - cs
chshs = 2 * np.sqrt(2) * cs
assert np.all(gaps > 0) and np.all(chshs <= 2 + 1e-12)
print(f"\nall {len(cs)} grid points: entropic gap > 0 and CHSH <= 2")

# Past the branch end the two criteria rejoin: every state with c > 1/sqrt2
# violates both.
c = 0.75
rho = ep.mems1(c)
print(f"\nbeyond the branch, c={c}: gap_a={ep.entropic_violation(rho).gap_a:+.4f}, "
      f"chsh={ep.chsh_max(rho):.4f} -> both criteria fire")
