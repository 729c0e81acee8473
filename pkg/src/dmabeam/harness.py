"""Config-driven Monte Carlo sweeps with seeded, order-independent trials.

Per-trial randomness derives from SeedSequence([master_seed, trial_index]),
so results do not depend on execution order and rerunning a sweep with the
same config and seed reproduces the CSV byte for byte. Within one trial all
schemes see the same sampled path set; the DMA-geometry schemes also share
the weight-initialization seed so per-realization comparisons are paired.
"""

from __future__ import annotations

import csv
import enum
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from . import baselines
from .baselines import SchemeId, half_wave_config, incompact_config
from .channel import build_channel, intrinsic_channel, sample_paths
from .config import SystemConfig, dbm_to_watt
from .optimizer import optimize

__all__ = [
    "SweepKind",
    "SweepSpec",
    "SweepResult",
    "CONFIG_KEYS",
    "load_config",
    "run_sweep",
    "write_csv",
    "read_csv",
]

CSV_HEADER = ["scheme", "sweep_kind", "swept_value", "mean_se", "std_se",
              "trials", "master_seed"]

DEFAULT_POWER_VALUES_DBM = (-10.0, -5.0, 0.0, 5.0, 10.0)
RF_SWEEP_POWER_DBM = 0.0  # transmit power used for RF-chain sweeps


class SweepKind(enum.Enum):
    POWER = "power"
    RF = "rf"


@dataclass(frozen=True)
class SweepSpec:
    kind: SweepKind = SweepKind.POWER
    values: tuple[float, ...] = DEFAULT_POWER_VALUES_DBM
    schemes: tuple[SchemeId, ...] = tuple(SchemeId)
    trials: int = 200
    master_seed: int = 0

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("values must be non-empty")
        if list(self.values) != sorted(self.values):
            raise ValueError("values must be sorted ascending")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not (0 <= self.master_seed < 2 ** 64):
            raise ValueError("master_seed must fit in an unsigned 64-bit int")


@dataclass(frozen=True)
class SweepResult:
    scheme: SchemeId
    sweep_kind: SweepKind
    swept_value: float
    mean_se: float
    std_se: float
    trials: int
    master_seed: int


CONFIG_KEYS = (
    "carrier_hz", "n_strips", "m_elements", "d_e_over_lambda",
    "d_s_over_lambda", "n_paths", "n_rf", "noise_dbm", "wg_beta",
    "wg_alpha", "eps", "max_outer_iters",
)

_INT_KEYS = {"n_strips", "m_elements", "n_paths", "n_rf", "max_outer_iters"}


def load_config(path: str | Path) -> tuple[SystemConfig, SweepSpec]:
    """Parse a flat key=value config file; missing keys take the defaults.

    Blank lines and lines starting with '#' are ignored. Unknown keys and
    malformed lines raise ValueError naming the line number.
    """
    raw: dict[str, float] = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, value = stripped.partition("=")
        key = key.strip()
        if key not in CONFIG_KEYS:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            raw[key] = int(value) if key in _INT_KEYS else float(value)
        except ValueError:
            raise ValueError(f"{path}:{lineno}: bad numeric value {value!r}")

    kwargs: dict = {}
    if "carrier_hz" in raw:
        kwargs["carrier_frequency"] = raw["carrier_hz"]
    for key, field in (("n_strips", "n_strips"), ("m_elements", "m_elements"),
                       ("n_paths", "n_paths"), ("n_rf", "n_rf"),
                       ("wg_beta", "wg_attenuation"),
                       ("wg_alpha", "wg_wavenumber"),
                       ("eps", "convergence_eps"),
                       ("max_outer_iters", "max_outer_iters")):
        if key in raw:
            kwargs[field] = raw[key]
    if "noise_dbm" in raw:
        kwargs["noise_var"] = dbm_to_watt(raw["noise_dbm"])
    cfg = SystemConfig(**kwargs)
    lam = cfg.wavelength
    if "d_e_over_lambda" in raw:
        cfg = replace(cfg, d_e=raw["d_e_over_lambda"] * lam)
    if "d_s_over_lambda" in raw:
        cfg = replace(cfg, d_s=raw["d_s_over_lambda"] * lam)
    return cfg, SweepSpec()


def _evaluate_scheme(scheme: SchemeId, cfg: SystemConfig, h_dma, h_inc,
                     cfg_inc: SystemConfig, h_hat_half, seeds) -> float:
    """Spectral efficiency of one scheme on one trial's channels."""
    rng = np.random.default_rng
    if scheme is SchemeId.PROPOSED:
        solution, _ = optimize(h_dma, cfg, rng(seeds[1]))
        return solution.spectral_efficiency
    if scheme is SchemeId.DMA_FULL_RF:
        return baselines.dma_full_rf(h_dma, cfg, rng(seeds[1]))
    if scheme is SchemeId.DMA_INCOMPACT:
        return baselines.dma_incompact(h_inc, cfg_inc, rng(seeds[2]))
    if scheme is SchemeId.RANDOM_SELECTION:
        return baselines.random_selection(h_dma, cfg, rng(seeds[3]))
    if scheme is SchemeId.FULLY_DIGITAL:
        return baselines.fully_digital(h_hat_half, cfg.tx_power, cfg.noise_var)
    if scheme is SchemeId.PS_HYBRID_PARTIAL:
        return baselines.ps_hybrid_partial(h_hat_half, cfg, cfg.n_rf)
    raise ValueError(f"unhandled scheme {scheme}")


def run_sweep(cfg: SystemConfig, spec: SweepSpec) -> list[SweepResult]:
    """Run spec.trials Monte Carlo trials for every swept value and scheme.

    Power-sweep values are transmit powers in dBm; RF-sweep values are
    RF-chain counts evaluated at 0 dBm.
    """
    if spec.kind is SweepKind.RF:
        for v in spec.values:
            n = int(v)
            if n != v or not (1 <= n <= cfg.n_strips):
                raise ValueError(
                    f"RF sweep value {v} must be an integer in [1, {cfg.n_strips}]")

    cfg_half = half_wave_config(cfg)
    cfg_inc = incompact_config(cfg)
    samples: dict[tuple[SchemeId, float], list[float]] = {
        (s, v): [] for s in spec.schemes for v in spec.values}

    for trial in range(spec.trials):
        seeds = np.random.SeedSequence([spec.master_seed, trial]).spawn(4)
        paths = sample_paths(cfg, np.random.default_rng(seeds[0]))
        h_dma = build_channel(paths, cfg)
        h_inc = build_channel(paths, cfg_inc)
        h_hat_half = intrinsic_channel(paths, cfg_half)
        for value in spec.values:
            if spec.kind is SweepKind.POWER:
                p, n_rf = dbm_to_watt(value), cfg.n_rf
            else:
                p, n_rf = dbm_to_watt(RF_SWEEP_POWER_DBM), int(value)
            cfg_v = replace(cfg, tx_power=p, n_rf=n_rf)
            cfg_inc_v = replace(cfg_inc, tx_power=p,
                                n_rf=min(n_rf, cfg_inc.n_strips))
            for scheme in spec.schemes:
                try:
                    se = _evaluate_scheme(scheme, cfg_v, h_dma, h_inc,
                                          cfg_inc_v, h_hat_half, seeds)
                except Exception as exc:
                    raise RuntimeError(
                        f"scheme {scheme.value} failed at value {value}, "
                        f"trial {trial}: {exc}") from exc
                samples[(scheme, value)].append(se)

    results = []
    for scheme in spec.schemes:
        for value in spec.values:
            ses = np.array(samples[(scheme, value)])
            std = float(np.std(ses, ddof=1)) if len(ses) > 1 else 0.0
            results.append(SweepResult(
                scheme=scheme, sweep_kind=spec.kind, swept_value=float(value),
                mean_se=float(np.mean(ses)), std_se=std,
                trials=spec.trials, master_seed=spec.master_seed))
    return results


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def write_csv(rows: list[SweepResult], path: str | Path) -> None:
    """Write sweep results; floats carry 17 significant digits so a read
    back reproduces them exactly."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in rows:
            writer.writerow([r.scheme.value, r.sweep_kind.value,
                             _fmt(r.swept_value), _fmt(r.mean_se),
                             _fmt(r.std_se), r.trials, r.master_seed])


def read_csv(path: str | Path) -> list[SweepResult]:
    rows = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != CSV_HEADER:
            raise ValueError(f"unexpected CSV header: {reader.fieldnames}")
        for rec in reader:
            rows.append(SweepResult(
                scheme=SchemeId(rec["scheme"]),
                sweep_kind=SweepKind(rec["sweep_kind"]),
                swept_value=float(rec["swept_value"]),
                mean_se=float(rec["mean_se"]),
                std_se=float(rec["std_se"]),
                trials=int(rec["trials"]),
                master_seed=int(rec["master_seed"])))
    return rows
