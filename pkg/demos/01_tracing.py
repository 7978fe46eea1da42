# %%
# Tracing a polygon onto grid nodes, one segment at a time.
import numpy as np

from gridcontour import Contour, build_grid, trace_contour
from gridcontour.shapes import l_shape, star

# %%
# An L-shaped domain on a coarse 12 x 12 grid.
L = l_shape()
grid = build_grid(L, 12, 12)
print(grid, "dx =", grid.dx, "dy =", grid.dy)

approx = trace_contour(L, grid)
print(len(approx), "chain nodes")
print(np.array(approx.nodes).T)

# %%
# The reflex corner needs no correction here; a star has five of them.
s = star()
approx = trace_contour(s, build_grid(s, 40, 40))
for e in approx.events:
    print(e.kind, "at given point", e.vertex, "->", [tuple(n) for n in e.nodes])

# %%
# A narrow spike: the walk overshoots the tip and the extra nodes are dropped.
spike = Contour.from_points([(0, 0), (1, 0), (1, 0.25), (37 / 64, 0.25), (27 / 64, 1), (27 / 64, 0.25), (0, 0.25)])
approx = trace_contour(spike, build_grid(spike, 16, 16))
print([(e.kind, e.vertex, len(e.nodes)) for e in approx.events])

# %%
# Orientation does not matter: reversing the contour gives the same nodes.
rev = trace_contour(spike.reversed(), approx.grid)
print(spike.orientation, rev.grid == approx.grid, set(rev.nodes) == set(approx.nodes))

# %%
# Tiny text picture of the chain (y up).
g = approx.grid
canvas = np.full((g.ny + 1, g.nx + 1), ".")
for i, j in approx.nodes:
    canvas[j, i] = "#"
print("\n".join("".join(row) for row in canvas[::-1]))
