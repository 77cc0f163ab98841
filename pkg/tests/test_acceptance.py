"""Acceptance suite. Run with ``pytest tests/test_acceptance.py -s`` to see the report lines."""

import random
import time

import numpy as np
import pytest

from affine_braids.a4_free import (
    RANK,
    FreeWord,
    free_conjugate,
    invert,
    multiply,
    puncture_table,
    reduce,
)
from affine_braids.braid_core import (
    BraidWord,
    compose,
    exponent_sum,
    full_twist,
    inverse,
    is_pure,
    power,
)
from affine_braids.center_quotient import (
    cosets_equal,
    emit_presentation,
    identity_class,
    make_class,
    relator_to_braid,
)
from affine_braids.garside import conjugate_in_braid_group, normal_form, words_equal
from affine_braids.loop_tracer import (
    generic_configuration,
    loops_homotopic,
    random_trig_loop,
    rotation_loop,
    stationary_loop,
    trace,
    trig_loop,
)

from conftest import random_word
from oracles import free_conjugate_bruteforce, naive_reduce, rewriting_classes


@pytest.fixture
def report(capsys):
    def emit(number, name, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {name}" + (f" ({detail})" if detail else ""))
        assert ok, detail
    return emit


def test_rotation_is_full_twist(report):
    times, ok = [], True
    for k in (3, 4, 5, 6):
        start = time.perf_counter()
        w = trace(rotation_loop(k, 144 * k))
        ok &= words_equal(w, full_twist(k))
        times.append(time.perf_counter() - start)
    ok &= max(times) < 10.0
    report(1, "rotation loop traces to the full twist, k = 3..6", ok, f"slowest k {max(times):.2f}s")


def test_fiber_collapse(report):
    start = time.perf_counter()
    ok = True
    for k in (5, 6):
        ok &= loops_homotopic(rotation_loop(k, 144 * k), stationary_loop(generic_configuration(k), 3))
        for m in range(-3, 4):
            ok &= cosets_equal(make_class(power(full_twist(k), m)), identity_class(k))
    elapsed = time.perf_counter() - start
    ok &= elapsed < 5.0
    report(2, "rotation loop is trivial in the quotient, twist powers collapse", ok, f"{elapsed:.2f}s")


def test_word_problem_oracle(report):
    classes = rewriting_classes(3, 8)
    short = [w for w in classes if len(w) <= 6]
    by_nf, by_oracle = {}, {}
    for word in short:
        by_nf.setdefault(normal_form(BraidWord(3, word)), set()).add(word)
        by_oracle.setdefault(classes[word], set()).add(word)
    partition_ok = {frozenset(s) for s in by_nf.values()} == {frozenset(s) for s in by_oracle.values()}

    rng = random.Random(3)
    groups = [sorted(s) for s in by_oracle.values() if len(s) > 1]
    disagreements = 0
    for n in range(500):
        if n % 2:
            a, b = rng.sample(rng.choice(groups), 2)
        else:
            a, b = rng.choice(short), rng.choice(short)
        same = classes[a] == classes[b]
        disagreements += words_equal(BraidWord(3, a), BraidWord(3, b)) != same
    ok = partition_ok and disagreements == 0
    report(3, "B_3 word problem matches the rewriting closure", ok,
           f"{len(short)} words, {len(by_oracle)} classes, {disagreements} random-pair disagreements")


def test_conjugacy(report):
    rng = random.Random(4)
    start = time.perf_counter()
    failures = 0
    for _ in range(200):
        k = rng.randint(2, 4)
        a, c = random_word(rng, k, 8), random_word(rng, k, 8)
        b = compose(compose(c, a), inverse(c))
        ok, wit = conjugate_in_braid_group(a, b, witness=True)
        failures += not (ok and words_equal(compose(compose(wit, a), inverse(wit)), b))
    negatives = 0
    while negatives < 200:
        k = rng.randint(2, 4)
        a, b = random_word(rng, k, 8), random_word(rng, k, 8)
        if exponent_sum(a) == exponent_sum(b):
            continue
        negatives += 1
        failures += conjugate_in_braid_group(a, b)
    elapsed = time.perf_counter() - start
    report(4, "conjugacy: constructed pairs found with witnesses, exponent mismatches rejected",
           failures == 0 and elapsed < 60.0, f"{failures} failures, {elapsed:.2f}s")


def test_delta_squared_central(report):
    rng = random.Random(5)
    failures = 0
    for k in range(2, 7):
        t = full_twist(k)
        for _ in range(100):
            w = random_word(rng, k, 20)
            failures += not words_equal(compose(t, w), compose(w, t))
    report(5, "full twist commutes with 500 random words", failures == 0, f"{failures} failures")


def test_presentation_self_check(report):
    failures, total = 0, 0
    for k in (3, 4, 5):
        p = emit_presentation(k)
        for n, r in enumerate(p.relators):
            target = full_twist(k) if n == p.center_relator else BraidWord.identity(k)
            failures += not words_equal(relator_to_braid(r, k), target)
            total += 1
    report(6, "presentation relators hold in the braid group", failures == 0, f"{total} relators, {failures} failures")


def test_tracer_stability(report):
    rng = np.random.default_rng(2026)
    failures = 0
    for _ in range(20):
        loop, centers, coeffs = random_trig_loop(5, 300, rng)
        w = trace(loop)
        failures += not is_pure(w)
        failures += not words_equal(trace(trig_loop(centers, coeffs, 2 * len(loop))), w)
        for theta in rng.uniform(0.0, 2.0 * np.pi, 8):
            v = trace(loop, direction=theta)
            failures += not (is_pure(v) and words_equal(v, w))
    report(7, "tracing is stable under resampling and projection direction", failures == 0,
           f"{failures} failures")


def test_free_group_module(report):
    rng = random.Random(8)

    def rand_word(max_len=10, alphabet=RANK):
        return FreeWord(tuple(rng.choice((1, -1)) * rng.randint(1, alphabet) for _ in range(rng.randint(0, max_len))))

    failures = 0
    for _ in range(500):
        a, b, c = rand_word(), rand_word(), rand_word()
        r = reduce(a)
        failures += reduce(r) != r or r.letters != naive_reduce(a.letters)
        failures += multiply(multiply(a, b), c) != multiply(a, multiply(b, c))
        failures += multiply(a, invert(a)).letters != ()
        # a small alphabet makes conjugate pairs common without construction
        x, y = rand_word(alphabet=2), rand_word(alphabet=2)
        if rng.random() < 0.5:
            y = multiply(multiply(b, x), invert(b))
        failures += free_conjugate(x, y) != free_conjugate_bruteforce(x.letters, y.letters)
    model = puncture_table()
    ok = failures == 0 and model.puncture_count == 12 and model.rank == 11
    report(8, "free group of rank 11: reduction, group laws, conjugacy, puncture count", ok,
           f"{failures} failures, {model.puncture_count} punctures, rank {model.rank}")
