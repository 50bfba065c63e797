import random

import pytest

from helpers import random_fullrank_rows

# (count, n, r) cells; 210 configurations total, ranks 1 through 4
_CELLS = [
    (20, 3, 1),
    (20, 4, 2),
    (25, 5, 2),
    (25, 6, 2),
    (30, 4, 3),
    (30, 5, 3),
    (20, 6, 3),
    (20, 5, 4),
    (20, 7, 4),
]


@pytest.fixture(scope="session")
def corpus():
    """Seeded full-rank integer configurations, entries in [-5, 5]."""
    rng = random.Random(20260817)
    out = []
    for count, n, r in _CELLS:
        for _ in range(count):
            out.append((n, r, random_fullrank_rows(rng, n, r)))
    return out
