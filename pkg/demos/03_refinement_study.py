# %%
# Area difference and node counts as the grid is refined.
import io

from gridcontour import refinement_study
from gridcontour.fileio import write_study_csv
from gridcontour.shapes import FIXTURES, blob

levels = [50, 70, 80, 100, 120, 150, 200, 250, 300]

# %%
for name in ("circle", "ellipse", "l_shape", "star"):
    rows = refinement_study(FIXTURES[name](), levels)
    print(f"{name:8s}", " ".join(f"{r.area_diff_pct:6.3f}" for r in rows))

# %%
# A dense 500-point curve, written in the study CSV layout.
rows = refinement_study(blob(), [50, 100, 200, 300])
buf = io.StringIO()
write_study_csv(rows, buf)
print(buf.getvalue())

# %%
# Interior nodes grow like n squared, boundary nodes like n.
for a, b in zip(rows, rows[1:]):
    print(b.n / a.n, round(b.interior_nodes / a.interior_nodes, 2), round(b.boundary_nodes / a.boundary_nodes, 2))
