import random

import pytest
from hypothesis import settings, strategies as st

from graphlogic.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


def random_graph(rng: random.Random, n_min: int, n_max: int, p_lo=0.2, p_hi=0.7) -> Graph:
    n = rng.randint(n_min, n_max)
    p = rng.uniform(p_lo, p_hi)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(12345)
