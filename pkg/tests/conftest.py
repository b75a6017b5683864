import random

import pytest

from ccsym.ring import Ring


@pytest.fixture
def rng():
    return random.Random(12345)


RINGS = [Ring(2), Ring(5, 3), Ring(3, 2), Ring(7), Ring(None), Ring(None, 3), Ring(2, 4)]
