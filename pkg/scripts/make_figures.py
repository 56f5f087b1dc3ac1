#!/usr/bin/env python3
"""Emit the six figure-data CSVs (figure2.csv .. figure7.csv).

Usage: python scripts/make_figures.py [OUTDIR]
"""

import pathlib
import sys

from qgmem.cli import FIGURES, figure_rows, write_csv

outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
outdir.mkdir(parents=True, exist_ok=True)
for fid in sorted(FIGURES):
    path = outdir / f"figure{fid}.csv"
    rows = figure_rows(fid)
    write_csv(str(path), rows)
    print(f"wrote {len(rows):4d} rows to {path}")
