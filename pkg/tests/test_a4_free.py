import random

import pytest
from hypothesis import given, strategies as st

from affine_braids.a4_free import (
    RANK,
    FreeWord,
    cyclic_reduce,
    format_free,
    free_conjugate,
    invert,
    multiply,
    parse_free,
    puncture_table,
    reduce,
)
from affine_braids.errors import BraidError, ParseError

from oracles import free_conjugate_bruteforce, naive_reduce

letters = st.integers(1, RANK).flatmap(lambda i: st.sampled_from([i, -i]))
free_words = st.lists(letters, max_size=20).map(lambda l: FreeWord(tuple(l)))


def fw(*letters):
    return FreeWord(letters)


@pytest.mark.parametrize("word, expected", [
    ((3, -3), ()),
    ((1, 2, -2, -1), ()),
    ((1, -2, 2, 3), (1, 3)),
])
def test_reduce_examples(word, expected):
    assert reduce(fw(*word)).letters == expected


def test_multiply_invert_examples():
    assert invert(fw(1, 2)).letters == (-2, -1)
    assert multiply(fw(1), fw(2)).letters == (1, 2)


def test_letter_range():
    for bad in (0, 12, -12):
        with pytest.raises(BraidError):
            fw(1, bad)


@given(free_words)
def test_reduce_idempotent(a):
    r = reduce(a)
    assert reduce(r) == r
    assert len(r) <= len(a)
    assert r.letters == naive_reduce(a.letters)


@given(free_words, free_words, free_words)
def test_group_laws(a, b, c):
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    assert multiply(a, invert(a)).letters == ()
    assert multiply(invert(a), a).letters == ()
    assert multiply(reduce(a), FreeWord()) == reduce(a)


def test_conjugate_examples():
    assert free_conjugate(fw(1, 2), fw(2, 1))
    assert not free_conjugate(fw(1), fw(2))
    assert free_conjugate(fw(), fw(4, -4))


@given(free_words, free_words)
def test_conjugate_constructed(a, c):
    b = multiply(multiply(c, a), invert(c))
    assert free_conjugate(a, b)
    assert len(cyclic_reduce(a)) == len(cyclic_reduce(b))


@given(free_words, free_words, free_words)
def test_conjugacy_equivalence(a, b, c):
    assert free_conjugate(a, a)
    assert free_conjugate(a, b) == free_conjugate(b, a)
    if free_conjugate(a, b) and free_conjugate(b, c):
        assert free_conjugate(a, c)


@pytest.mark.parametrize("seed", range(5))
def test_conjugacy_against_bruteforce(seed):
    rng = random.Random(seed)
    for _ in range(40):
        a = fw(*[rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(rng.randint(0, 6))])
        b = fw(*[rng.choice((1, -1)) * rng.randint(1, 3) for _ in range(rng.randint(0, 6))])
        assert free_conjugate(a, b) == free_conjugate_bruteforce(a.letters, b.letters)


def test_cyclic_reduce():
    assert cyclic_reduce(fw(2, 1, 3, -2)).letters == (1, 3)
    assert cyclic_reduce(fw(5, -5)).letters == ()


def test_puncture_table():
    model = puncture_table()
    assert model.puncture_count == 12
    assert model.rank == 11 == RANK
    pairs = [(i, j) for i, j, _ in model.puncture_labels]
    assert sorted(set(pairs)) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert all(pairs.count(p) == 2 for p in set(pairs))


def test_text_round_trip():
    w = parse_free("1 -4 7")
    assert w.letters == (1, -4, 7)
    assert format_free(w) == "1 -4 7"
    with pytest.raises(ParseError):
        parse_free("1 a")
    with pytest.raises(ParseError):
        parse_free("12")
