"""Backend parity: the compiled kernels must match the pure-Python ones."""

import random

import pytest

from quiddity import kernels
from quiddity.kernels import available_backends, get_module

pure = get_module("python")

needs_c = pytest.mark.skipif(
    "c" not in available_backends(), reason="compiled kernels not built"
)


def random_cases(count, seed=20240601):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 16)
        word = tuple(rng.randint(0, 9) for _ in range(n))
        pat = tuple(rng.randint(0, 9) for _ in range(rng.randint(1, 6)))
        yield word, pat


@needs_c
def test_canonical_form_parity():
    comp = get_module("c")
    for word, _ in random_cases(4000):
        assert comp.canonical_form(word) == pure.canonical_form(word)


@needs_c
def test_contains_parity():
    comp = get_module("c")
    for word, pat in random_cases(4000):
        assert comp.cyclic_contains(word, pat) == pure.cyclic_contains(word, pat)
        assert comp.linear_contains(word, pat) == pure.linear_contains(word, pat)


@needs_c
def test_insert_fanout_parity():
    comp = get_module("c")
    for word, _ in random_cases(1500):
        if len(word) >= 2:
            assert comp.insert_fanout(word) == pure.insert_fanout(word)


def test_dispatch_survives_backend_switch():
    original = kernels.backend()
    try:
        for name in available_backends():
            kernels.set_backend(name)
            assert kernels.backend() == name
            assert kernels.canonical_form((2, 1, 3, 1, 2)) == (1, 2, 2, 1, 3)
            assert kernels.cyclic_contains((1, 2, 1, 2), (2, 1, 2))
            assert not kernels.linear_contains((1, 2, 2, 1, 3), (3, 1))
    finally:
        kernels.set_backend(original)


def test_huge_entries_fall_back():
    big = (10**30, 1, 10**30 + 1)
    assert kernels.canonical_form(big) == pure.canonical_form(big)


def test_pure_canonical_form_basics():
    assert pure.canonical_form(()) == ()
    assert pure.canonical_form((5,)) == (5,)
    assert pure.canonical_form((3, 2, 1, 3, 2, 1)) == (1, 2, 3, 1, 2, 3)
