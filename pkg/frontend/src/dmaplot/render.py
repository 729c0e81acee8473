"""Turn simulator sweep CSVs into the two comparison figures.

Input contract is the harness CSV:

    scheme,sweep_kind,swept_value,mean_se,std_se,trials,master_seed

One line is drawn per scheme (mean spectral efficiency vs swept value) with
standard-error bars (std_se / sqrt(trials)).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from math import sqrt
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

EXPECTED_HEADER = ["scheme", "sweep_kind", "swept_value", "mean_se",
                   "std_se", "trials", "master_seed"]

AXIS_LABELS = {
    "power": "BS transmit power (dBm)",
    "rf": "Number of RF chains",
}

SCHEME_LABELS = {
    "proposed": "Proposed (selection + DMA weights)",
    "fully_digital": "Fully digital MRT",
    "dma_full_rf": "DMA, no RF-chain reduction",
    "dma_incompact": "DMA, half-wavelength spacing",
    "random_selection": "Random microstrip selection",
    "ps_hybrid_partial": "Phase-shifter hybrid (partial)",
}


@dataclass(frozen=True)
class SweepRow:
    scheme: str
    sweep_kind: str
    swept_value: float
    mean_se: float
    std_se: float
    trials: int


@dataclass(frozen=True)
class FigureSpec:
    input_csv: Path
    output_image: Path
    sweep_kind: str  # "power" or "rf"
    title: str = ""
    xlabel: str = ""
    ylabel: str = "Spectral efficiency (bit/s/Hz)"

    def __post_init__(self) -> None:
        if self.sweep_kind not in AXIS_LABELS:
            raise ValueError(f"sweep_kind must be one of {sorted(AXIS_LABELS)}")


def parse_csv(path: Path) -> list[SweepRow]:
    """Read a harness CSV; raises ValueError naming the offending row."""
    rows: list[SweepRow] = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != EXPECTED_HEADER:
            raise ValueError(f"{path}: bad header {header!r}")
        for lineno, rec in enumerate(reader, start=2):
            if len(rec) != len(EXPECTED_HEADER):
                raise ValueError(f"{path}: row {lineno} has {len(rec)} fields")
            try:
                rows.append(SweepRow(
                    scheme=rec[0], sweep_kind=rec[1],
                    swept_value=float(rec[2]), mean_se=float(rec[3]),
                    std_se=float(rec[4]), trials=int(rec[5])))
            except ValueError as exc:
                raise ValueError(f"{path}: row {lineno}: {exc}") from None
    return rows


def render(spec: FigureSpec) -> None:
    """Render one figure: a mean-SE curve with error bars per scheme."""
    rows = parse_csv(spec.input_csv)
    for row in rows:
        if row.sweep_kind != spec.sweep_kind:
            raise ValueError(
                f"CSV contains sweep_kind {row.sweep_kind!r}, "
                f"figure expects {spec.sweep_kind!r}")

    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    schemes = sorted({r.scheme for r in rows})
    for scheme in schemes:
        pts = sorted((r for r in rows if r.scheme == scheme),
                     key=lambda r: r.swept_value)
        x = [p.swept_value for p in pts]
        y = [p.mean_se for p in pts]
        err = [p.std_se / sqrt(p.trials) if p.trials > 0 else 0.0 for p in pts]
        ax.errorbar(x, y, yerr=err, marker="o", capsize=3,
                    label=SCHEME_LABELS.get(scheme, scheme))

    ax.set_xlabel(spec.xlabel or AXIS_LABELS[spec.sweep_kind])
    ax.set_ylabel(spec.ylabel)
    if spec.title:
        ax.set_title(spec.title)
    if schemes:
        ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(spec.output_image)
    plt.close(fig)
