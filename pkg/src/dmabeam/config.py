"""System-level configuration for the DMA downlink simulator.

All quantities are stored in SI units (Hz, m, W). Transmit power and noise
are configured externally in dBm and converted on the way in.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

SPEED_OF_LIGHT = 299792458.0  # m/s


def dbm_to_watt(dbm: float) -> float:
    return 10.0 ** ((dbm - 30.0) / 10.0)


def watt_to_dbm(watt: float) -> float:
    import math

    return 10.0 * math.log10(watt) + 30.0


@dataclass(frozen=True)
class SystemConfig:
    """Physical and algorithmic parameters of one simulated link.

    The metasurface transmitter has ``n_strips`` microstrips with
    ``m_elements`` radiating elements each (U = N*M elements total), fed by
    ``n_rf`` RF chains through a switch network. Spacing defaults follow the
    28 GHz setup: lambda/5 between elements inside a strip, lambda/2 between
    strips.
    """

    carrier_frequency: float = 28e9
    n_strips: int = 10
    m_elements: int = 30
    d_e: float | None = None  # element spacing along a strip; default lambda/5
    d_s: float | None = None  # spacing between strips; default lambda/2
    n_paths: int = 12
    n_rf: int = 3
    tx_power: float = 1e-3  # W (0 dBm)
    noise_var: float = 1e-3  # W (0 dBm)
    wg_attenuation: float = 0.6  # 1/m, amplitude decay along the waveguide
    wg_wavenumber: float = 827.67  # 1/m, guided phase constant
    convergence_eps: float = 1e-4  # absolute SNR increase threshold, outer loop
    max_outer_iters: int = 100
    inner_eps: float = 1e-6  # objective increase threshold per ascent sweep
    max_inner_sweeps: int = 200

    def __post_init__(self) -> None:
        if self.carrier_frequency <= 0:
            raise ValueError("carrier_frequency must be positive")
        lam = SPEED_OF_LIGHT / self.carrier_frequency
        if self.d_e is None:
            object.__setattr__(self, "d_e", lam / 5.0)
        if self.d_s is None:
            object.__setattr__(self, "d_s", lam / 2.0)
        for name in ("n_strips", "m_elements", "n_paths", "n_rf",
                     "max_outer_iters", "max_inner_sweeps"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be a positive integer")
        for name in ("d_e", "d_s", "tx_power", "noise_var"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")
        if self.n_rf > self.n_strips:
            raise ValueError(
                f"n_rf ({self.n_rf}) cannot exceed n_strips ({self.n_strips})")

    @property
    def wavelength(self) -> float:
        return SPEED_OF_LIGHT / self.carrier_frequency

    @property
    def n_elements_total(self) -> int:
        return self.n_strips * self.m_elements

    def with_power(self, tx_power_watt: float) -> "SystemConfig":
        return replace(self, tx_power=tx_power_watt)

    def with_n_rf(self, n_rf: int) -> "SystemConfig":
        return replace(self, n_rf=n_rf)
