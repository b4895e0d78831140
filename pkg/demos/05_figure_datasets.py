"""Regenerate every figure dataset through the command-line interface.

Each preset writes one (or several) CSV files with a JSON sidecar that records
the configuration, truncations and the truncation convergence gate.  Point any
external plotter at the CSVs; rerunning with the same build reproduces them
byte for byte.
"""

import pathlib
import sys

from rabigeom import cli

outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "figure_data")
outdir.mkdir(parents=True, exist_ok=True)

jobs = [
    ["fig1", "--out", str(outdir / "fig1_curvature_field.csv")],
    ["fig2", "--out", str(outdir / "fig2_noneigen_rwa.csv")],
    ["fig3", "--out", str(outdir / "fig3_spectrum.csv")],
    ["fig4", "--out", str(outdir / "fig4_berry.csv")],
    ["fig5", "--out", str(outdir / "fig5_noneigen.csv")],
]
for args in jobs:
    code = cli.main(args)
    print(f"rabigeom {' '.join(args)}  ->  exit {code}")
    if code != 0:
        sys.exit(code)

print(f"\ndatasets in {outdir}/:")
for path in sorted(outdir.iterdir()):
    print(f"  {path.name}  ({path.stat().st_size} bytes)")
