import random

import pytest

from affine_braids.braid_core import BraidWord


def random_word(rng: random.Random, k: int, max_len: int, min_len: int = 0) -> BraidWord:
    n = rng.randint(min_len, max_len)
    return BraidWord(k, [rng.choice((1, -1)) * rng.randint(1, k - 1) for _ in range(n)])


def random_pure_word(rng: random.Random, k: int, max_len: int) -> BraidWord:
    """A random product of conjugated band generators (always pure)."""
    from affine_braids.braid_core import band_generator, compose, inverse

    w = BraidWord.identity(k)
    for _ in range(rng.randint(0, max(1, max_len // 4))):
        i = rng.randint(1, k - 1)
        j = rng.randint(i + 1, k)
        a = band_generator(i, j, k)
        if rng.random() < 0.5:
            a = inverse(a)
        w = compose(w, a)
    return w


@pytest.fixture
def rng():
    return random.Random(20261015)
