"""Geometric mmWave channel, waveguide propagation response, effective channel.

Vector layout convention: all length-U vectors are microstrip-major, i.e. the
entry for element m of microstrip n sits at index u = n*M + m. The spatial
frequency of that element for angle-of-departure theta is

    Omega(n, m; theta) = m*d_e*sin(theta) + n*d_s*cos(theta).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import SystemConfig

__all__ = [
    "PathSet",
    "SteeringVector",
    "ChannelRealization",
    "steering_vector",
    "sample_paths",
    "intrinsic_channel",
    "waveguide_response",
    "effective_channel",
    "build_channel",
]


@dataclass(frozen=True)
class PathSet:
    """Sampled multipath components: complex gains and angles of departure."""

    gains: np.ndarray  # complex, shape (L,)
    aods: np.ndarray  # radians in [0, pi), shape (L,)

    def __post_init__(self) -> None:
        gains = np.asarray(self.gains, dtype=complex)
        aods = np.asarray(self.aods, dtype=float)
        if gains.shape != aods.shape or gains.ndim != 1:
            raise ValueError("gains and aods must be 1-D arrays of equal length")
        if np.any(aods < 0) or np.any(aods >= np.pi):
            raise ValueError("every AoD must lie in [0, pi)")
        object.__setattr__(self, "gains", gains)
        object.__setattr__(self, "aods", aods)

    def __len__(self) -> int:
        return len(self.gains)


@dataclass(frozen=True)
class SteeringVector:
    aod: float
    spatial_freqs: np.ndarray  # meters, shape (U,)
    entries: np.ndarray  # unit-modulus complex, shape (U,)


@dataclass(frozen=True)
class ChannelRealization:
    """One end-to-end channel: intrinsic wireless part times waveguide response."""

    paths: PathSet
    intrinsic: np.ndarray  # h_hat, shape (U,)
    waveguide: np.ndarray  # f, shape (U,)
    effective: np.ndarray  # h = h_hat * f elementwise, shape (U,)
    n_strips: int
    m_elements: int

    def strip(self, n: int) -> np.ndarray:
        """Effective channel block of microstrip n (length M)."""
        m = self.m_elements
        return self.effective[n * m:(n + 1) * m]

    @property
    def per_strip(self) -> np.ndarray:
        """Effective channel reshaped to (N, M)."""
        return self.effective.reshape(self.n_strips, self.m_elements)


def steering_vector(theta: float, cfg: SystemConfig) -> SteeringVector:
    """Array response vector for angle-of-departure ``theta``.

    Raises ValueError if theta is outside [0, pi).
    """
    if not (0.0 <= theta < np.pi):
        raise ValueError(f"AoD must lie in [0, pi), got {theta}")
    n = np.arange(cfg.n_strips)
    m = np.arange(cfg.m_elements)
    # microstrip-major: omega[n*M + m]
    omega = (m[None, :] * cfg.d_e * np.sin(theta)
             + n[:, None] * cfg.d_s * np.cos(theta)).ravel()
    entries = np.exp(-2j * np.pi * omega / cfg.wavelength)
    return SteeringVector(aod=float(theta), spatial_freqs=omega, entries=entries)


def sample_paths(cfg: SystemConfig, rng: np.random.Generator) -> PathSet:
    """Draw L i.i.d. paths: gains CN(0, 1/L), AoDs uniform on [0, pi).

    Gains are drawn before angles, so results are reproducible for a given
    generator state.
    """
    ell = cfg.n_paths
    scale = np.sqrt(1.0 / (2.0 * ell))
    gains = scale * (rng.standard_normal(ell) + 1j * rng.standard_normal(ell))
    aods = rng.uniform(0.0, np.pi, size=ell)
    return PathSet(gains=gains, aods=aods)


def intrinsic_channel(paths: PathSet, cfg: SystemConfig) -> np.ndarray:
    """Geometric channel h_hat = sum_l eta_l * a(theta_l), shape (U,)."""
    h = np.zeros(cfg.n_elements_total, dtype=complex)
    for eta, theta in zip(paths.gains, paths.aods):
        h += eta * steering_vector(float(theta), cfg).entries
    return h


def waveguide_response(cfg: SystemConfig) -> np.ndarray:
    """Per-element propagation response inside the microstrips, shape (U,).

    Element m sits a physical distance rho = (m+1)*d_e from the feed port and
    accrues amplitude decay exp(-beta*rho) and phase -alpha*rho. The profile
    is identical for every strip.
    """
    rho = (np.arange(cfg.m_elements) + 1) * cfg.d_e
    f_strip = np.exp(-rho * (cfg.wg_attenuation + 1j * cfg.wg_wavenumber))
    return np.tile(f_strip, cfg.n_strips)


def effective_channel(h_hat: np.ndarray, f: np.ndarray) -> np.ndarray:
    """Elementwise product of intrinsic channel and waveguide response."""
    h_hat = np.asarray(h_hat)
    f = np.asarray(f)
    if h_hat.shape != f.shape:
        raise ValueError(
            f"shape mismatch: h_hat {h_hat.shape} vs f {f.shape}")
    return h_hat * f


def build_channel(paths: PathSet, cfg: SystemConfig) -> ChannelRealization:
    """Assemble the full ChannelRealization for one path set and geometry."""
    h_hat = intrinsic_channel(paths, cfg)
    f = waveguide_response(cfg)
    return ChannelRealization(
        paths=paths,
        intrinsic=h_hat,
        waveguide=f,
        effective=effective_channel(h_hat, f),
        n_strips=cfg.n_strips,
        m_elements=cfg.m_elements,
    )
