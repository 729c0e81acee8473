"""Joint microstrip selection and beamforming optimizer.

The alternating scheme:

  1. Digital side (closed form): rank strips by |h_n^H g_n|^2, keep the
     n_rf best, and apply maximum ratio transmission over the kept strips.
  2. Analog side: coordinate ascent over the unit-circle variables
     b_{n,m} = e^{j*phi_{n,m}} of the selected strips. With every other
     coordinate fixed, the optimal update is

        b_{n,m} <- exp(-j * angle(h*_{n,m} * htilde*_{n,m}))

     where htilde collects the contribution of all other coordinates plus
     the constant j-offset of the Lorentzian circle.

Both steps never decrease the SNR, so the outer loop produces a monotone
trace and terminates once the increase drops below the configured threshold.

The U x U diagonal weight matrix is never materialized; everything reduces
to the per-strip scalars c_n = h_n^H g_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .channel import ChannelRealization
from .config import SystemConfig
from .errors import DegenerateChannelError
from .weights import DmaWeights, random_weights

__all__ = [
    "BeamformingSolution",
    "OptimizerTrace",
    "strip_channels",
    "strip_gains",
    "select_strips",
    "mrt_beamformer",
    "embed_w",
    "snr",
    "tilde_h",
    "update_phase",
    "coordinate_ascent",
    "optimize",
    "spectral_efficiency",
]


@dataclass(frozen=True)
class BeamformingSolution:
    active_set: tuple[int, ...]  # selected strip indices, ascending
    w: np.ndarray  # digital beamformer, length N, support in active_set
    weights: DmaWeights
    snr: float
    spectral_efficiency: float  # bit/s/Hz
    outer_iterations: int


@dataclass(frozen=True)
class OptimizerTrace:
    snr_per_iteration: tuple[float, ...]


def strip_channels(h: ChannelRealization, weights: DmaWeights) -> np.ndarray:
    """Vector of effective strip channels c_n = h_n^H g_n, shape (N,)."""
    return np.einsum("nm,nm->n", np.conj(h.per_strip), weights.weights)


def strip_gains(h: ChannelRealization, weights: DmaWeights) -> np.ndarray:
    """Per-strip channel gains |h_n^H g_n|^2, shape (N,)."""
    return np.abs(strip_channels(h, weights)) ** 2


def select_strips(gains: np.ndarray, n_rf: int) -> list[int]:
    """Indices of the n_rf largest gains, ties to the lowest index, ascending."""
    gains = np.asarray(gains)
    if n_rf > len(gains):
        raise ValueError(f"n_rf ({n_rf}) exceeds number of strips ({len(gains)})")
    order = np.argsort(-gains, kind="stable")
    return sorted(int(i) for i in order[:n_rf])


def mrt_beamformer(h: ChannelRealization, weights: DmaWeights,
                   active: Sequence[int], tx_power: float) -> np.ndarray:
    """Maximum-ratio digital beamformer over the active strips.

    Returns wbar with wbar_j = sqrt(P) * conj(c_{i_j}) / ||c_active||, so
    ||wbar||^2 = P and the resulting SNR is P * ||c_active||^2 / sigma^2.
    """
    c = strip_channels(h, weights)[list(active)]
    norm = np.linalg.norm(c)
    if norm == 0.0:
        raise DegenerateChannelError(
            "all effective strip channels on the active set are zero")
    return np.sqrt(tx_power) * np.conj(c) / norm


def embed_w(wbar: np.ndarray, active: Sequence[int], n_strips: int) -> np.ndarray:
    """Scatter the reduced beamformer into an N-vector, zeros elsewhere."""
    active = list(active)
    if len(active) != len(wbar):
        raise ValueError("active set and wbar lengths differ")
    w = np.zeros(n_strips, dtype=complex)
    for idx, val in zip(active, wbar):
        if not 0 <= idx < n_strips:
            raise IndexError(f"strip index {idx} out of range [0, {n_strips})")
        w[idx] = val
    return w


def snr(h: ChannelRealization, weights: DmaWeights, w: np.ndarray,
        noise_var: float) -> float:
    """Receive SNR (1/sigma^2) * |sum_n c_n w_n|^2 for digital beamformer w."""
    if noise_var <= 0:
        raise ValueError("noise_var must be strictly positive")
    c = strip_channels(h, weights)
    return float(np.abs(np.dot(c, w)) ** 2 / noise_var)


def tilde_h(h_sel: np.ndarray, b: np.ndarray, n: int, m: int) -> complex:
    """Fixed part of strip n's channel sum when coordinate (n, m) is freed.

    h_sel and b are (k, M) matrices over the selected strips. Returns
    sum_{m' != m} conj(h[n, m']) b[n, m'] + j * sum_{m'} conj(h[n, m']).
    """
    hc = np.conj(h_sel[n])
    total = complex(np.dot(hc, b[n]) + 1j * hc.sum())
    return total - complex(hc[m] * b[n, m])


def update_phase(h_sel: np.ndarray, b: np.ndarray, n: int, m: int) -> complex:
    """Per-coordinate optimal unit-circle value with all others fixed.

    Degenerate coordinates (zero channel entry or zero htilde) keep their
    current value; any phase is optimal there.
    """
    ht = tilde_h(h_sel, b, n, m)
    p = np.conj(h_sel[n, m]) * np.conj(ht)
    if p == 0:
        return complex(b[n, m])
    return complex(np.exp(-1j * np.angle(p)))


def _ascent_objective(s: np.ndarray) -> float:
    # sum_n |c_n|^2 over selected strips; c_n = s_n / 2.
    return float(np.sum(np.abs(s) ** 2)) / 4.0


def coordinate_ascent(h_sel: np.ndarray, weights: DmaWeights,
                      active: Sequence[int], eps_inner: float,
                      max_inner: int) -> DmaWeights:
    """Coordinate ascent over the selected strips' unit-circle variables.

    Sweeps coordinates in (strip, element) order until the objective
    sum_{n in active} |h_n^H g_n|^2 increases by less than eps_inner, or
    max_inner sweeps. Strips decouple in the objective, so one element
    update is applied to all selected strips at once; the result is
    identical to the sequential per-coordinate order. Weights of
    non-selected strips pass through unchanged.
    """
    active = list(active)
    h_sel = np.asarray(h_sel)
    k, m_elems = h_sel.shape
    hc = np.conj(h_sel)
    b = weights.circle_vars[active].copy()
    const = 1j * hc.sum(axis=1)

    s = np.einsum("nm,nm->n", hc, b) + const
    obj = _ascent_objective(s)
    for _ in range(max_inner):
        # refresh the running sums once per sweep to stop drift
        s = np.einsum("nm,nm->n", hc, b) + const
        for m in range(m_elems):
            hm = hc[:, m]
            # q = conj(h_{n,m}) * conj(htilde_{n,m}); optimal b = conj(q)/|q|
            q = hm * np.conj(s - hm * b[:, m])
            mask = q != 0
            b_new = b[:, m].copy()
            b_new[mask] = np.conj(q[mask]) / np.abs(q[mask])
            s += hm * (b_new - b[:, m])
            b[:, m] = b_new
        new_obj = _ascent_objective(s)
        if new_obj - obj < eps_inner:
            break
        obj = new_obj

    phases = weights.phases.copy()
    phases[active] = np.mod(np.angle(b), 2.0 * np.pi)
    return DmaWeights(phases=phases)


def optimize(h: ChannelRealization, cfg: SystemConfig,
             rng: np.random.Generator,
             fixed_active_set: Sequence[int] | None = None,
             ) -> tuple[BeamformingSolution, OptimizerTrace]:
    """Alternating microstrip selection / MRT / coordinate ascent loop.

    Weights start from seeded uniform-random phases and are warm-started
    across outer iterations. If fixed_active_set is given, selection is
    frozen to it (used by the random-selection baseline).
    """
    weights = random_weights(cfg, rng)
    trace: list[float] = []
    prev = 0.0
    iters = 0
    for _ in range(cfg.max_outer_iters):
        iters += 1
        gains = strip_gains(h, weights)
        if not np.any(gains > 0.0):
            raise DegenerateChannelError("every strip gain is exactly zero")
        if fixed_active_set is None:
            active = select_strips(gains, cfg.n_rf)
        else:
            active = sorted(int(i) for i in fixed_active_set)
        weights = coordinate_ascent(h.per_strip[active], weights, active,
                                    cfg.inner_eps, cfg.max_inner_sweeps)
        wbar = mrt_beamformer(h, weights, active, cfg.tx_power)
        w = embed_w(wbar, active, cfg.n_strips)
        current = snr(h, weights, w, cfg.noise_var)
        trace.append(current)
        if current - prev < cfg.convergence_eps:
            break
        prev = current

    solution = BeamformingSolution(
        active_set=tuple(active),
        w=w,
        weights=weights,
        snr=current,
        spectral_efficiency=spectral_efficiency(current),
        outer_iterations=iters,
    )
    return solution, OptimizerTrace(snr_per_iteration=tuple(trace))


def spectral_efficiency(snr_value: float) -> float:
    """log2(1 + snr), bit/s/Hz."""
    if snr_value < 0:
        raise ValueError("snr must be nonnegative")
    return math.log1p(snr_value) / math.log(2.0)
