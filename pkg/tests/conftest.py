"""Shared fixtures: small Monte Carlo budgets so the unit suite stays fast."""

import pytest

from hardynum import WosConfig


@pytest.fixture
def fast_cfg():
    return WosConfig(n_samples=20_000, seed=0)


@pytest.fixture
def tiny_cfg():
    # for bounded / exterior domains where walks are cheap or capped
    return WosConfig(n_samples=2_000, seed=0, max_steps=20_000)
