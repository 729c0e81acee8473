"""Command-line entry point: power-sweep, rf-sweep and single evaluations."""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .baselines import SchemeId
from .harness import (SweepKind, SweepSpec, load_config, run_sweep, write_csv)
from .config import SystemConfig


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="key=value config file")
    parser.add_argument("--trials", type=int, help="Monte Carlo trials per point")
    parser.add_argument("--seed", type=int, help="master seed (u64)")
    parser.add_argument("--schemes",
                        help="comma-separated scheme names (default: all)")
    parser.add_argument("--values",
                        help="comma-separated sweep values (dBm or N_RF)")
    parser.add_argument("--out", help="output CSV path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dmabeam",
        description="Monte Carlo link simulations for DMA hybrid beamforming")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
            ("power-sweep", "spectral efficiency vs transmit power (dBm)"),
            ("rf-sweep", "spectral efficiency vs number of RF chains"),
            ("single", "evaluate schemes at a single transmit power")):
        _add_common(sub.add_parser(name, help=help_text))
    return parser


def _build_spec(args, cfg: SystemConfig, base: SweepSpec) -> SweepSpec:
    if args.command == "rf-sweep":
        kind = SweepKind.RF
        values = tuple(float(v) for v in range(1, cfg.n_strips + 1))
    else:
        kind = SweepKind.POWER
        values = base.values if args.command == "power-sweep" else (0.0,)
    if args.values:
        values = tuple(sorted(float(v) for v in args.values.split(",")))
    schemes = base.schemes
    if args.schemes:
        schemes = tuple(SchemeId.parse(s) for s in args.schemes.split(","))
    spec = replace(base, kind=kind, values=values, schemes=schemes)
    if args.trials is not None:
        spec = replace(spec, trials=args.trials)
    if args.seed is not None:
        spec = replace(spec, master_seed=args.seed)
    return spec


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.config:
        cfg, base_spec = load_config(args.config)
    else:
        cfg, base_spec = SystemConfig(), SweepSpec()
    spec = _build_spec(args, cfg, base_spec)

    rows = run_sweep(cfg, spec)
    if args.out:
        write_csv(rows, args.out)
        print(f"wrote {len(rows)} rows to {args.out}")
    else:
        unit = "dBm" if spec.kind is SweepKind.POWER else "N_RF"
        print(f"{'scheme':<20} {unit:>8} {'mean SE':>12} {'std SE':>12}")
        for r in rows:
            print(f"{r.scheme.value:<20} {r.swept_value:>8g} "
                  f"{r.mean_se:>12.4f} {r.std_se:>12.4f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
