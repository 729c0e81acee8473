"""Lorentzian-constrained metasurface weights and the unit-circle change of variables.

Each radiating element applies a tunable weight g = (j + e^{j*phi}) / 2, a
circle of radius 1/2 centred at j/2. The affine map b = 2g - j sends that
circle to the unit circle, which is the parameterization the coordinate
ascent works in.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import SystemConfig
from .errors import ConstraintViolationError

MANIFOLD_TOL = 1e-9

__all__ = [
    "DmaWeights",
    "lorentzian_of_phase",
    "b_of_g",
    "g_of_b",
    "random_weights",
    "effective_strip_channel",
]


def lorentzian_of_phase(phi):
    """Weight on the Lorentzian circle for phase ``phi`` (scalar or array)."""
    return (1j + np.exp(1j * np.asarray(phi))) / 2.0


def b_of_g(g):
    """Map a Lorentzian-circle weight to its unit-circle variable b = 2g - j."""
    g = np.asarray(g)
    if np.any(np.abs(np.abs(g - 0.5j) - 0.5) > MANIFOLD_TOL):
        raise ConstraintViolationError("g is off the Lorentzian circle")
    return 2.0 * g - 1j


def g_of_b(b):
    """Inverse map g = (b + j) / 2 for unit-modulus b."""
    b = np.asarray(b)
    if np.any(np.abs(np.abs(b) - 1.0) > MANIFOLD_TOL):
        raise ConstraintViolationError("b is off the unit circle")
    return (b + 1j) / 2.0


@dataclass(frozen=True)
class DmaWeights:
    """Per-element analog weights of an N x M metasurface.

    Phases are the canonical free parameter; the Lorentzian weights g and the
    unit-circle variables b are always derived from them, so the constraint
    set cannot drift.
    """

    phases: np.ndarray  # radians in [0, 2*pi), shape (N, M)

    def __post_init__(self) -> None:
        phases = np.mod(np.asarray(self.phases, dtype=float), 2.0 * np.pi)
        if phases.ndim != 2:
            raise ValueError("phases must be an N x M matrix")
        object.__setattr__(self, "phases", phases)

    @property
    def weights(self) -> np.ndarray:
        """Lorentzian weights g, shape (N, M)."""
        return lorentzian_of_phase(self.phases)

    @property
    def circle_vars(self) -> np.ndarray:
        """Unit-circle variables b = 2g - j = e^{j*phi}, shape (N, M)."""
        return np.exp(1j * self.phases)

    @classmethod
    def from_circle_vars(cls, b: np.ndarray) -> "DmaWeights":
        b = np.asarray(b)
        if np.any(np.abs(np.abs(b) - 1.0) > MANIFOLD_TOL):
            raise ConstraintViolationError("b is off the unit circle")
        return cls(phases=np.angle(b))

    @property
    def shape(self):
        return self.phases.shape


def random_weights(cfg: SystemConfig, rng: np.random.Generator) -> DmaWeights:
    """Uniformly random phases on [0, 2*pi), shape (N, M)."""
    phases = rng.uniform(0.0, 2.0 * np.pi, size=(cfg.n_strips, cfg.m_elements))
    return DmaWeights(phases=phases)


def effective_strip_channel(h_n: np.ndarray, g_n: np.ndarray) -> complex:
    """Scalar c_n = h_n^H g_n collapsing one strip's channel and weights."""
    h_n = np.asarray(h_n)
    g_n = np.asarray(g_n)
    if h_n.shape != g_n.shape:
        raise ValueError(f"shape mismatch: h_n {h_n.shape} vs g_n {g_n.shape}")
    return complex(np.vdot(h_n, g_n))
