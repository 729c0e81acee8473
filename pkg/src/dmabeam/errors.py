"""Exception types shared across the package."""


class ConstraintViolationError(ValueError):
    """A value lies off its constraint manifold (Lorentzian circle / unit circle)."""


class DegenerateChannelError(ValueError):
    """Every effective strip channel is exactly zero; beamforming is undefined."""
