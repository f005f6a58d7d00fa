import random

import pytest

from overq.series import EXACT, Ring, Series, Zmod

RING_POOL = (
    EXACT,
    Zmod(2),
    Zmod(3),
    Zmod(4),
    Zmod(8),
    Zmod(9),
    Zmod(16),
    Zmod(32),
    Zmod(97),
    Zmod(2592),
)


def random_series(rng: random.Random, ring: Ring, order: int, span: int = 9) -> Series:
    return Series(ring, [rng.randint(-span, span) for _ in range(order)])


def random_unit_series(rng: random.Random, ring: Ring, order: int) -> Series:
    coeffs = [rng.randint(-9, 9) for _ in range(order)]
    coeffs[0] = rng.choice([1, -1])
    return Series(ring, coeffs)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
