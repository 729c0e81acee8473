"""Joint microstrip selection and hybrid beamforming for dynamic metasurface antennas."""

from .config import SystemConfig, dbm_to_watt, watt_to_dbm
from .channel import (ChannelRealization, PathSet, SteeringVector,
                      build_channel, effective_channel, intrinsic_channel,
                      sample_paths, steering_vector, waveguide_response)
from .weights import (DmaWeights, b_of_g, effective_strip_channel, g_of_b,
                      lorentzian_of_phase, random_weights)
from .optimizer import (BeamformingSolution, OptimizerTrace, coordinate_ascent,
                        embed_w, mrt_beamformer, optimize, select_strips,
                        snr, spectral_efficiency, strip_gains, strip_channels,
                        tilde_h, update_phase)
from .baselines import SchemeId
from .errors import ConstraintViolationError, DegenerateChannelError
from .harness import (SweepKind, SweepResult, SweepSpec, load_config,
                      read_csv, run_sweep, write_csv)

__version__ = "0.1.0"
