"""
Data behind the four level and potential plots
==============================================

Each figure is a sweep over alpha (or r) with a fixed parameter set; the
curves come back as arrays and can be written as x,y CSV files with the
command line tool (``monopole-spectra figures all``).
"""

import numpy as np

from monopole_spectra import default_figure_spec, figure_data

for fig in ("fig1", "fig2", "fig3", "fig4"):
    spec = default_figure_spec(fig, points=50)
    data = figure_data(spec)
    print(f"{fig}: {len(data)} curves over {spec.axis} in [{spec.x_min}, {spec.x_max}]")

# fig1: levels compress as n grows
fig1 = figure_data(default_figure_spec("fig1", points=5))
for n in range(3):
    print(f"E_n{n}_l1 at alpha = 0.4 ... 0.95:", np.round(fig1[f"n{n}_l1"][1], 5))

# fig4: screening lifts E_01 at every alpha
fig4 = figure_data(default_figure_spec("fig4", points=5))
for name, (x, y) in fig4.items():
    print(name, np.round(y, 5))
