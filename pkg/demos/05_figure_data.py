# %% [markdown]
# # Panel datasets as CSV
#
# The reproduce helper writes one CSV per panel. Plotting is left to
# whatever tool you prefer. The same files come from
# `esdmem reproduce --figure K --outdir DIR`.

# %%
import sys
import tempfile
from pathlib import Path

import numpy as np

from esdmem.cli import reproduce

outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="esdmem-"))

# %%
# Coarse grids keep this quick. Drop the overrides for the full 64 x 256 grid.
for figure in (1, 2, 3):
    for path in reproduce(figure, outdir, a_points=17, p_points=65, jobs=1):
        print(path, sum(1 for _ in open(path)) - 1, "rows")

# %%
# Depolarizing N3 data: the last p with N3 > 0 for each a (b = 0).
data = np.genfromtxt(outdir / "fig2_n3.csv", delimiter=",", skip_header=1, usecols=(0, 1, 2, 4))
for a in np.unique(data[:, 0])[::4]:
    curve = data[(data[:, 0] == a) & (data[:, 1] == 0.0)]
    alive = curve[curve[:, 3] > 0, 2]
    print(f"a={a:.3f}  N3 > 0 up to p = {alive.max() if alive.size else 0.0:.3f}")
