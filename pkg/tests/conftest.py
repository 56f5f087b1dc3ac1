import math
import random

import pytest

from qgmem.protocol import EntanglementParams, StrategyParams

PI = math.pi


def random_strategy(rng: random.Random) -> StrategyParams:
    return StrategyParams(rng.uniform(0, PI), rng.uniform(-PI, PI),
                          rng.uniform(-PI, PI))


def random_ent(rng: random.Random) -> EntanglementParams:
    return EntanglementParams(rng.uniform(0, PI / 2), rng.uniform(0, PI / 2))


def random_entries(rng: random.Random, lo=-2.0, hi=5.0):
    return tuple(rng.uniform(lo, hi) for _ in range(4))


@pytest.fixture
def rng():
    return random.Random(20240817)
