"""Membership decider, connected sums, boundary classes, ray witnesses."""

import math
import random

import pytest

from fvlab import (BOUNDARY, EXTREMAL_RAY, INTERIOR, CapExceeded, Caps,
                   FVector, GVector, HVector, OrthantPoint, classify_boundary,
                   connected_sum_g, decide_simplicial_entries,
                   decide_simplicial_f, g_to_h, h_to_f, is_m_sequence,
                   pseudo_power, ray_density_witness)

from oracles import msequences_bounded


def from_g(g_entries, d):
    g = GVector(d // 2, tuple(g_entries))
    return h_to_f(g_to_h(g, d))


def test_accepts_simplex():
    decision = decide_simplicial_f(FVector(4, (5, 10, 10, 5)))
    assert decision.accepted
    assert decision.certificate.entries == (0, 0)


def test_rejects_non_palindromic():
    decision = decide_simplicial_f(FVector(3, (6, 13, 8)))
    assert not decision.accepted
    assert decision.reason == "non-palindromic-h"


def test_rejects_macaulay_violation():
    decision = decide_simplicial_f(from_g((2, 5), 4))
    assert not decision.accepted
    assert decision.reason == "macaulay-violation"
    assert decision.index == 1


def test_rejects_negative_g():
    # palindromic h with a dip: h = (1, 0, 1, 0, 1)
    decision = decide_simplicial_f(h_to_f(HVector(4, (1, 0, 1, 0, 1))))
    assert not decision.accepted
    assert decision.reason == "negative-entry"


def test_certificate_round_trip():
    rng = random.Random(2)
    for _ in range(100):
        d = rng.randint(2, 8)
        k = d // 2
        g = []
        for i in range(k):
            hi = 40 if i == 0 else pseudo_power(g[-1], i)
            g.append(rng.randint(0, min(40, hi)))
        v = from_g(g, d)
        decision = decide_simplicial_f(v)
        assert decision.accepted
        assert is_m_sequence(decision.certificate).ok
        assert h_to_f(g_to_h(decision.certificate, d)) == v


def test_entries_non_integer_and_negative():
    decision = decide_simplicial_entries(3, ["6", "12.5", "8"])
    assert not decision.accepted and decision.reason == "non-integer"
    decision = decide_simplicial_entries(3, [6, -12, 8])
    assert not decision.accepted and decision.reason == "negative-entry"
    assert decision.index == 2
    decision = decide_simplicial_entries(4, ["5", "10", "10", "5"])
    assert decision.accepted
    with pytest.raises(ValueError):
        decide_simplicial_entries(3, ["6", "x", "8"])


def test_small_oracle_equivalence():
    # d = 4: accepted set over a g-grid equals the enumerated M-sequences
    accepted = set()
    for g1 in range(-1, 12):
        for g2 in range(-1, 12):
            try:
                v = from_g((g1, g2), 4)
            except ValueError:
                continue  # negative face counts never form an FVector
            if decide_simplicial_f(v).accepted:
                accepted.add((g1, g2))
    expected = set(msequences_bounded(2, 11, pseudo_power))
    assert accepted == expected


def test_connected_sum():
    assert connected_sum_g(GVector(2, (0, 0)), GVector(2, (0, 0))).entries == (0, 0)
    assert connected_sum_g(GVector(2, (1, 0)), GVector(2, (1, 0))).entries == (2, 0)
    assert connected_sum_g(GVector(2, (3, 2)), GVector(2, (2, 1))).entries == (5, 3)
    with pytest.raises(ValueError):
        connected_sum_g(GVector(2, (1, 0)), GVector(3, (1, 0, 0)))


def test_connected_sum_preserves_acceptance():
    rng = random.Random(7)
    for _ in range(60):
        d = rng.choice((4, 5, 6))
        k = d // 2

        def rand_mseq():
            g = []
            for i in range(k):
                hi = 30 if i == 0 else min(30, pseudo_power(g[-1], i))
                g.append(rng.randint(0, hi))
            return GVector(k, tuple(g))

        g1, g2 = rand_mseq(), rand_mseq()
        assert decide_simplicial_f(from_g(g1.entries, d)).accepted
        assert decide_simplicial_f(from_g(g2.entries, d)).accepted
        assert decide_simplicial_f(
            from_g(connected_sum_g(g1, g2).entries, d)).accepted


def test_classify_boundary():
    for a in (1, 4, 99):
        cls = classify_boundary(GVector(3, (a, 0, 0)))
        assert cls.kind == EXTREMAL_RAY and cls.k == 1
    cls = classify_boundary(GVector(3, (3, 2, 0)))
    assert cls.kind == BOUNDARY and cls.k == 2
    assert classify_boundary(GVector(3, (1, 1, 1))).kind == INTERIOR
    apex = classify_boundary(GVector(3, (0, 0, 0)))
    assert apex.kind == BOUNDARY and apex.k == 0
    with pytest.raises(ValueError):
        classify_boundary(GVector(2, (2, 5)))
    with pytest.raises(ValueError):
        classify_boundary(GVector(3, (2, 0, 1)))


def test_extremal_rays_single_direction():
    # all extremal-ray forms have their support at coordinate 1
    for entries in msequences_bounded(3, 6, pseudo_power):
        g = GVector(3, entries)
        if not any(entries):
            continue
        cls = classify_boundary(g)
        if cls.kind == EXTREMAL_RAY:
            assert entries[0] > 0 and entries[1] == entries[2] == 0


def test_ray_density_witness_exact_hits():
    g = ray_density_witness(OrthantPoint(2, (1, 0)), 0.5)
    assert g.entries == (1, 0)
    g = ray_density_witness(OrthantPoint(2, (1, 1)), 0.01)
    assert g.entries == (1, 1)


def test_ray_density_witness_axis():
    eps = 0.01
    x = OrthantPoint(2, (0, 1))
    g = ray_density_witness(x, eps)
    assert is_m_sequence(g).ok
    assert math.atan2(g.entries[0], g.entries[1]) < eps


def test_ray_density_witness_generic():
    x = OrthantPoint(3, (2, 0, 5))
    g = ray_density_witness(x, 0.02)
    assert is_m_sequence(g).ok
    inner = sum(a * b for a, b in zip(x.coords, g.entries))
    cos2 = inner * inner / (sum(a * a for a in x.coords)
                            * sum(b * b for b in g.entries))
    assert math.acos(math.sqrt(cos2)) < 0.02


def test_ray_density_witness_cap():
    tight = Caps(ray_doublings=1)
    with pytest.raises(CapExceeded):
        ray_density_witness(OrthantPoint(2, (0, 1)), 1e-9, caps=tight)
    with pytest.raises(ValueError):
        ray_density_witness(OrthantPoint(2, (0, 0)), 0.1)
