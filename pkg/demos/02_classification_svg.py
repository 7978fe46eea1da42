# %%
# Boundary / interior / exterior labels for finite-difference stencils.
import numpy as np

from gridcontour import Label, build_grid, classify_nodes, trace_contour
from gridcontour.fileio import write_mesh, write_svg
from gridcontour.shapes import ellipse

# %%
E = ellipse()
grid = build_grid(E, 60, 60, padding=0.02)
approx = trace_contour(E, grid)
labels = classify_nodes(grid, approx)

print("boundary", labels.boundary_count, "interior", labels.interior_count, "exterior", labels.exterior_count)
print(labels.boundary_count + labels.interior_count + labels.exterior_count == np.prod(grid.shape))

# %%
# labels.labels[i, j] is an int8 table; interior nodes come back sorted by (j, i).
inner = labels.nodes(Label.INTERIOR)
print(inner[:5])
print(np.bincount(labels.labels.ravel()))

# %%
# Five-point Laplacian stencils only touch interior or boundary nodes.
L = labels.labels
i, j = inner[:, 0], inner[:, 1]
around = np.stack([L[i + 1, j], L[i - 1, j], L[i, j + 1], L[i, j - 1]])
print("stencils reaching outside:", np.count_nonzero(around == Label.EXTERIOR))

# %%
write_mesh(labels, approx, "ellipse_mesh.csv")
write_svg(E, approx, labels, "ellipse.svg")
print(open("ellipse_mesh.csv").read().splitlines()[:6])
