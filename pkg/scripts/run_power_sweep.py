#!/usr/bin/env python3
"""Reproduce the spectral-efficiency vs transmit-power comparison.

Runs all six schemes over -10..10 dBm and writes results/power_sweep.csv.
Pass extra CLI flags to override trials, seed, schemes or values.
"""

import pathlib
import sys

from dmabeam.cli import main

if __name__ == "__main__":
    out = pathlib.Path(__file__).resolve().parent.parent / "results"
    out.mkdir(exist_ok=True)
    argv = ["power-sweep", "--trials", "200", "--seed", "2024",
            "--out", str(out / "power_sweep.csv")] + sys.argv[1:]
    sys.exit(main(argv))
