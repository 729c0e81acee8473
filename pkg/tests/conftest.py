import numpy as np
import pytest

from dmabeam import SystemConfig, build_channel, sample_paths


@pytest.fixture
def cfg():
    """Paper-scale default configuration (N=10, M=30, N_RF=3)."""
    return SystemConfig()


@pytest.fixture
def small_cfg():
    return SystemConfig(n_strips=3, m_elements=2, n_paths=4, n_rf=2)


def make_channel(cfg, seed):
    rng = np.random.default_rng(seed)
    return build_channel(sample_paths(cfg, rng), cfg)
