"""CLI: dmaplot plot --csv <path> --out <path> --kind <power|rf>."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import FigureSpec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dmaplot", description="Render sweep figures from simulator CSVs")
    sub = parser.add_subparsers(dest="command", required=True)
    plot = sub.add_parser("plot", help="render one figure")
    plot.add_argument("--csv", required=True, help="input sweep CSV")
    plot.add_argument("--out", required=True, help="output image path")
    plot.add_argument("--kind", required=True, choices=("power", "rf"),
                      help="which sweep the CSV holds")
    plot.add_argument("--title", default="", help="optional figure title")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    render(FigureSpec(input_csv=Path(args.csv), output_image=Path(args.out),
                      sweep_kind=args.kind, title=args.title))
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
