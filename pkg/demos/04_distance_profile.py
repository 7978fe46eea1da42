# %%
# How far each chain node sits from the given contour, along the chain.
import math

import numpy as np

from gridcontour import boundary_distance_profile, build_grid, trace_contour
from gridcontour.shapes import circle, star

C = circle()
for n in (50, 100, 300):
    g = build_grid(C, n, n)
    prof = boundary_distance_profile(trace_contour(C, g), C)
    cell = math.sqrt(2) * max(g.dx, g.dy)
    print(n, len(prof), f"max {prof.max:.5f}", f"mean {prof.mean:.5f}", f"max/cell {prof.max / cell:.3f}")

# %%
# Where along the star's chain are the worst nodes?
S = star()
prof = boundary_distance_profile(trace_contour(S, build_grid(S, 100, 100)), S)
worst = np.argsort(prof.distances)[-5:][::-1]
for k in worst:
    print(k, tuple(map(int, prof.nodes[k])), round(float(prof.distances[k]), 5))

# %%
# Coarse histogram in tenths of a cell diagonal.
g = build_grid(S, 100, 100)
bins = np.floor(prof.distances / (0.1 * math.hypot(g.dx, g.dy))).astype(int)
print(np.bincount(bins))
