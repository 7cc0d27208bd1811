import itertools

import numpy as np
import pytest


def brute_ideals(leq):
    """All down-closed subsets of an order given as a boolean matrix."""
    n = len(leq)
    out = []
    for r in range(n + 1):
        for S in itertools.combinations(range(n), r):
            s = set(S)
            if all(z in s for x in s for z in range(n) if leq[z][x]):
                out.append(frozenset(s))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
