import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from configs.lab_settings import THREADS_ENV_VAR
from src.common.models import PrimeContext


@pytest.fixture(autouse=True)
def single_thread(monkeypatch):
    monkeypatch.delenv(THREADS_ENV_VAR, raising=False)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def ctx2():
    return PrimeContext(p=2, n=2)


@pytest.fixture
def ctx3():
    return PrimeContext(p=2, n=3)


def torus_points(rng, count, nvars):
    return np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, size=(count, nvars)))


def separated_alphabet(rng, n, low, high):
    """n parameters with moduli in [low, high] and phases spread around the circle"""
    phases = 2.0 * np.pi * np.arange(n) / n + rng.uniform(-0.2, 0.2, size=n) + rng.uniform(0.0, 2.0 * np.pi)
    return rng.uniform(low, high, size=n) * np.exp(1j * phases)
