import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from maxplus import MaxPlusMatrix, max_cycle_mean, negate, scalar_times


def rand_weight(rng: random.Random, lo: int = -5, hi: int = 5) -> Fraction:
    den = rng.choice((1, 1, 2, 3, 4))
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_matrix(rng: random.Random, n: int, density: float = 0.6) -> MaxPlusMatrix:
    rows = []
    for _ in range(n):
        rows.append(
            [rand_weight(rng) if rng.random() < density else None for _ in range(n)]
        )
    return MaxPlusMatrix(rows)


def random_cyclic_matrix(rng: random.Random, n: int, density: float = 0.6) -> MaxPlusMatrix:
    """A random matrix whose digraph has at least one cycle."""
    while True:
        a = random_matrix(rng, n, density)
        if not max_cycle_mean(a).is_bottom:
            return a


def random_irreducible(rng: random.Random, n: int, density: float = 0.4) -> MaxPlusMatrix:
    """Random strongly connected matrix: a random Hamiltonian cycle plus noise."""
    order = list(range(n))
    rng.shuffle(order)
    rows = [[None] * n for _ in range(n)]
    for k in range(n):
        rows[order[k]][order[(k + 1) % n]] = rand_weight(rng)
    for i in range(n):
        for j in range(n):
            if rows[i][j] is None and rng.random() < density:
                rows[i][j] = rand_weight(rng)
    return MaxPlusMatrix(rows)


def normalized(a: MaxPlusMatrix) -> MaxPlusMatrix:
    """Subtract the maximum cycle mean, so the result has cycle mean 0."""
    lam = max_cycle_mean(a)
    return scalar_times(negate(lam), a)


def random_strictly_below(rng: random.Random, bound: MaxPlusMatrix, prob: float = 0.5) -> MaxPlusMatrix:
    """A random matrix strictly dominated by `bound` (entrywise, exactly)."""
    raw = bound.raw()
    rows = []
    for i in range(bound.n):
        row = []
        for j in range(bound.n):
            ceiling = raw[i][j]
            if ceiling is not None and rng.random() < prob:
                row.append(ceiling - Fraction(rng.randint(1, 8), rng.choice((1, 2, 4))))
            else:
                row.append(None)
        rows.append(row)
    return MaxPlusMatrix(rows)


@pytest.fixture
def rng():
    return random.Random(20240611)
