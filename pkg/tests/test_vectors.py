"""Transform correctness: fixtures, round trips, and invariants."""

import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fvlab import (FVector, GVector, HVector, f_to_h, fatness, g_to_h, h_to_f,
                   h_to_g)


def test_simplex_h_is_all_ones():
    for d in range(1, 21):
        f = FVector(d, tuple(comb(d + 1, i) for i in range(1, d + 1)))
        assert f_to_h(f).entries == (1,) * (d + 1)


def test_octahedron():
    h = f_to_h(FVector(3, (6, 12, 8)))
    assert h.entries == (1, 3, 3, 1)
    assert h.is_palindromic()


def test_rejection_fixture_not_palindromic():
    h = f_to_h(FVector(3, (6, 13, 8)))
    assert h.entries == (1, 3, 4, 0)
    assert not h.is_palindromic()


def test_h_to_f_fixtures():
    assert h_to_f(HVector(4, (1, 1, 1, 1, 1))).entries == (5, 10, 10, 5)
    assert h_to_f(HVector(3, (1, 3, 3, 1))).entries == (6, 12, 8)


def test_h_to_f_polygon():
    # the m-gon has h = (1, m-2, 1); checked by direct count for small m
    for m in range(3, 7):
        assert h_to_f(HVector(2, (1, m - 2, 1))).entries == (m, m)


def test_h_to_f_rejects_bad_h0():
    with pytest.raises(ValueError):
        h_to_f(HVector(3, (2, 3, 3, 1)))


def test_h_to_g_fixtures():
    assert h_to_g(HVector(4, (1, 1, 1, 1, 1))).entries == (0, 0)
    assert h_to_g(HVector(3, (1, 3, 3, 1))).entries == (2,)
    assert h_to_g(HVector(4, (1, 4, 6, 4, 1))).entries == (3, 2)


def test_g_to_h_fixtures():
    assert g_to_h(GVector(2, (0, 0)), 4).entries == (1, 1, 1, 1, 1)
    assert g_to_h(GVector(1, (2,)), 3).entries == (1, 3, 3, 1)
    assert g_to_h(GVector(2, (3, 2)), 5).entries == (1, 4, 6, 6, 4, 1)


def test_g_to_h_length_mismatch():
    with pytest.raises(ValueError):
        g_to_h(GVector(2, (3, 2)), 4 + 2)


def test_g_round_trip():
    for d in (2, 3, 4, 5, 6, 7):
        k = d // 2
        g = GVector(k, tuple(range(1, k + 1)))
        assert h_to_g(g_to_h(g, d)).entries == g.entries


def test_round_trip_random_big():
    rng = random.Random(11)
    for _ in range(300):
        d = rng.randint(1, 12)
        f = FVector(d, tuple(rng.randint(0, 10 ** 30) for _ in range(d)))
        assert h_to_f(f_to_h(f)) == f


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.data())
def test_round_trip_property(d, data):
    entries = data.draw(st.tuples(
        *[st.integers(0, 10 ** 18) for _ in range(d)]))
    f = FVector(d, entries)
    assert h_to_f(f_to_h(f)) == f


def test_fatness_fixtures():
    assert fatness(FVector(4, (5, 10, 10, 5))) == 2
    assert fatness(FVector(4, (16, 32, 24, 8))) == Fraction(7, 3)
    assert fatness(FVector(4, (8, 24, 32, 16))) == Fraction(7, 3)


def test_fatness_reversal_invariant():
    rng = random.Random(5)
    for _ in range(50):
        entries = tuple(rng.randint(1, 500) for _ in range(4))
        assert fatness(FVector(4, entries)) == fatness(FVector(4, entries[::-1]))


def test_fatness_rejects():
    with pytest.raises(ValueError):
        fatness(FVector(3, (6, 12, 8)))
    with pytest.raises(ValueError):
        fatness(FVector(4, (0, 5, 5, 0)))


def test_validation():
    with pytest.raises(ValueError):
        FVector(3, (1, 2))
    with pytest.raises(ValueError):
        FVector(2, (1, -2))
    with pytest.raises(ValueError):
        FVector(2, (1.5, 2))
    with pytest.raises(ValueError):
        FVector(0, ())
