"""Benchmark schemes the proposed design is compared against.

Three array geometries appear in the comparison:

  * the sub-wavelength DMA (N=10 strips, M=30 elements, d_e = lambda/5),
  * an incompact DMA with half-wavelength element spacing (10 x 10),
  * a conventional half-wavelength array (10 x 10, no waveguide response)
    used by the fully digital and phase-shifter baselines.

All geometries are evaluated on the same sampled path set so comparisons
are paired.
"""

from __future__ import annotations

import enum
from dataclasses import replace

import numpy as np

from .channel import ChannelRealization
from .config import SystemConfig
from .optimizer import optimize, spectral_efficiency

__all__ = [
    "SchemeId",
    "half_wave_config",
    "incompact_config",
    "fully_digital",
    "dma_full_rf",
    "dma_incompact",
    "random_selection",
    "ps_hybrid_partial",
]


class SchemeId(enum.Enum):
    PROPOSED = "proposed"
    FULLY_DIGITAL = "fully_digital"
    DMA_FULL_RF = "dma_full_rf"
    DMA_INCOMPACT = "dma_incompact"
    RANDOM_SELECTION = "random_selection"
    PS_HYBRID_PARTIAL = "ps_hybrid_partial"

    @classmethod
    def parse(cls, name: str) -> "SchemeId":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(s.value for s in cls)
            raise ValueError(f"unknown scheme {name!r}; expected one of {valid}")


def half_wave_config(cfg: SystemConfig) -> SystemConfig:
    """10 x 10 half-wavelength geometry for the conventional-array baselines."""
    lam = cfg.wavelength
    return replace(cfg, n_strips=10, m_elements=10, d_e=lam / 2, d_s=lam / 2,
                   n_rf=min(cfg.n_rf, 10))


def incompact_config(cfg: SystemConfig) -> SystemConfig:
    """DMA geometry with all spacings widened to half a wavelength."""
    lam = cfg.wavelength
    return replace(cfg, n_strips=10, m_elements=10, d_e=lam / 2, d_s=lam / 2,
                   n_rf=min(cfg.n_rf, 10))


def fully_digital(h_hat: np.ndarray, tx_power: float, noise_var: float) -> float:
    """MRT with one RF chain per antenna: SE = log2(1 + P ||h_hat||^2 / sigma^2)."""
    gain = float(np.sum(np.abs(h_hat) ** 2))
    return spectral_efficiency(tx_power * gain / noise_var)


def dma_full_rf(h: ChannelRealization, cfg: SystemConfig,
                rng: np.random.Generator) -> float:
    """Proposed pipeline with the RF-chain cap lifted (n_rf = N)."""
    solution, _ = optimize(h, replace(cfg, n_rf=cfg.n_strips), rng)
    return solution.spectral_efficiency


def dma_incompact(h_incompact: ChannelRealization, cfg_incompact: SystemConfig,
                  rng: np.random.Generator) -> float:
    """Proposed pipeline on the half-wavelength DMA geometry."""
    solution, _ = optimize(h_incompact, cfg_incompact, rng)
    return solution.spectral_efficiency


def random_selection(h: ChannelRealization, cfg: SystemConfig,
                     rng: np.random.Generator) -> float:
    """Uniformly random strip subset, then MRT + coordinate ascent on it.

    The subset is drawn from ``rng`` first, then the weight initialization
    consumes the same generator.
    """
    subset = sorted(int(i) for i in
                    rng.choice(cfg.n_strips, size=cfg.n_rf, replace=False))
    solution, _ = optimize(h, cfg, rng, fixed_active_set=subset)
    return solution.spectral_efficiency


def ps_hybrid_partial(h_hat: np.ndarray, cfg: SystemConfig, n_rf: int) -> float:
    """Partially connected phase-shifter hybrid on the half-wavelength array.

    The antennas are split into n_rf contiguous subarrays of near-equal
    size. Each antenna applies the unit-modulus conjugate of its channel
    phase, so a subarray's effective channel is sum |h_hat_u| over its
    antennas; the digital stage is MRT across those effective channels
    under total radiated power P (phase-shifter columns normalized).
    """
    u = len(h_hat)
    if n_rf > u:
        raise ValueError(f"n_rf ({n_rf}) exceeds number of antennas ({u})")
    bounds = np.array_split(np.arange(u), n_rf)
    coherent = np.array([np.sum(np.abs(h_hat[idx])) for idx in bounds])
    sizes = np.array([len(idx) for idx in bounds])
    snr = cfg.tx_power * float(np.sum(coherent ** 2 / sizes)) / cfg.noise_var
    return spectral_efficiency(snr)
