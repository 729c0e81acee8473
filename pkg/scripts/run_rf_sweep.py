#!/usr/bin/env python3
"""Reproduce the spectral-efficiency vs RF-chain-count comparison at 0 dBm.

Writes results/rf_sweep.csv; extra CLI flags override the defaults.
"""

import pathlib
import sys

from dmabeam.cli import main

if __name__ == "__main__":
    out = pathlib.Path(__file__).resolve().parent.parent / "results"
    out.mkdir(exist_ok=True)
    argv = ["rf-sweep", "--trials", "200", "--seed", "2024",
            "--out", str(out / "rf_sweep.csv")] + sys.argv[1:]
    sys.exit(main(argv))
