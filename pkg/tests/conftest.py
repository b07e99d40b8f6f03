import math
import random

import pytest

from chromabound import core


def random_instance(rng, n, v_lo, v_hi, e_lo, e_hi):
    """One seeded instance with sizes drawn from the given ranges."""
    num_vertices = rng.randint(v_lo, v_hi)
    cap = math.comb(num_vertices, n)
    num_edges = min(rng.randint(e_lo, e_hi), cap)
    return core.random_uniform(n, num_vertices, num_edges, rng.randrange(1 << 30))


@pytest.fixture
def fano():
    return core.fano()


@pytest.fixture
def rng():
    return random.Random(20260822)
