import random
from fractions import Fraction

import pytest

from qhecke.cartan import CartanDatum, RootSum
from qhecke.grdim import graded_dim_beta, simple_count
from qhecke.reptype import (
    beta_for_max_weight,
    classify,
    dominantize,
    max_dominant_weights,
    weight_decompose,
    weyl_orbit_probe,
)
from qhecke.young import content

import oracles


def rootsum(entries):
    return RootSum(tuple(entries))


# -- maximal dominant weights ----------------------------------------------

@pytest.mark.parametrize("ell,expected", [(2, [0, 2]), (3, [0, 2]), (4, [0, 2, 4]),
                                          (5, [0, 2, 4]), (6, [0, 2, 4, 6])])
def test_max_dominant_weight_indices(ell, expected):
    data = max_dominant_weights(ell)
    assert [item.i for item in data] == expected
    assert len(data) == ell // 2 + 1


@pytest.mark.parametrize("ell", [2, 3, 4, 5, 6])
def test_max_dominant_weights_form_and_dominance(ell):
    cd = CartanDatum(ell)
    for item in max_dominant_weights(ell):
        expected = cd.lambda0 + cd.varpi(item.i) - cd.delta.scaled(Fraction(item.i, 2))
        assert item.weight == expected
        for j in range(ell + 1):
            assert cd.pairing(j, item.weight) >= 0


@pytest.mark.parametrize("ell", [4, 5, 6])
def test_max_weights_match_staircase_partitions(ell):
    cd = CartanDatum(ell)
    for item in max_dominant_weights(ell):
        i = item.i
        staircase = (i,) * (i // 2)
        assert cd.lambda0 - cd.root_weight(content(staircase, ell)) == item.weight


@pytest.mark.parametrize("ell", [2, 4, 6])
def test_max_weight_deficit_minus_delta_leaves_cone(ell):
    for item in max_dominant_weights(ell):
        i = item.i
        beta = beta_for_max_weight(i, i // 2, ell)
        assert graded_dim_beta(beta, ell)
        with pytest.raises(ValueError):
            beta_for_max_weight(i, Fraction(i, 2) - 1, ell)


# -- dominantization ----------------------------------------------------------

def test_dominantize_examples():
    cd = CartanDatum(2)
    assert dominantize(cd.lambda0, 2) == (cd.lambda0, [])
    dominant, word = dominantize(cd.lambda0 - cd.alpha(0), 2)
    assert dominant == cd.lambda0
    assert word == [0]


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_dominantize_delta_minus_alpha_ell(ell):
    # L0 - delta + a_ell lies in the orbit of L0 - a0, hence of L0
    cd = CartanDatum(ell)
    weight = cd.lambda0 - cd.delta + cd.alpha(ell)
    dominant, word = dominantize(weight, ell)
    assert dominant == cd.lambda0
    assert word


def test_dominantize_validation():
    cd = CartanDatum(2)
    with pytest.raises(ValueError):
        dominantize(cd.lambda0.scaled(2), 2)
    with pytest.raises(ValueError):
        dominantize(cd.lambda0 - cd.varpi(2).scaled(Fraction(1, 2)), 2)


def test_dominantize_terminates_within_bound():
    rng = random.Random(31)
    for _ in range(120):
        ell = rng.choice((2, 3, 4))
        cd = CartanDatum(ell)
        entries = [rng.randrange(5) for _ in range(ell + 1)]
        if sum(entries) > 12:
            continue
        weight = cd.lambda0 - cd.root_weight(rootsum(entries))
        dominant, word = dominantize(weight, ell)
        for j in range(ell + 1):
            assert cd.pairing(j, dominant) >= 0
        check = weight
        for i in word:
            check = cd.reflect(i, check)
        assert check == dominant


# -- weight decomposition -----------------------------------------------------

def test_weight_decompose_examples():
    assert weight_decompose(rootsum((2, 3, 2, 1, 0)), 4) == (4, 2)
    assert weight_decompose(rootsum((0, 0, 0)), 2) == (0, 0)
    assert weight_decompose(rootsum((0, 1, 0)), 2) is None


def test_weight_decompose_delta_shifts():
    for ell in (2, 3):
        cd = CartanDatum(ell)
        assert weight_decompose(cd.delta_root, ell) == (0, 1)
        assert weight_decompose(cd.delta_root.scaled(2), ell) == (0, 2)


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_membership_agrees_with_dimension_formula(ell):
    for n in range(9):
        for comp in oracles.compositions(n, ell + 1):
            beta = rootsum(comp)
            member = weight_decompose(beta, ell) is not None
            assert member == bool(graded_dim_beta(beta, ell)), beta


# -- classification ----------------------------------------------------------

def test_classification_table():
    assert classify(rootsum((0, 0, 0)), 2).tag == "simple"
    for ell in (2, 3, 4):
        beta = rootsum((1, 1) + (0,) * (ell - 1))
        assert classify(beta, ell).tag == "finite"
    assert classify(rootsum((1, 2, 1)), 2).tag == "tame"
    assert classify(rootsum((1, 2, 2, 1)), 3).tag == "wild"
    assert classify(rootsum((1, 2, 2, 2, 1)), 4).tag == "wild"
    assert classify(beta_for_max_weight(4, 2, 4), 4).tag == "wild"
    assert classify(beta_for_max_weight(2, 2, 2), 2).tag == "wild"
    for ell in (2, 3):
        cd = CartanDatum(ell)
        assert classify(cd.delta_root.scaled(2), ell).tag == "wild"
        assert classify(cd.delta_root.scaled(3), ell).tag == "wild"
    assert classify(rootsum((0, 1, 0)), 2).tag == "zero"


def test_small_blocks_around_delta():
    # delta - a_i is finite type for 1 <= i <= ell-1 and simple for i = ell;
    # removing a neighboring pair a_i, a_{i+1} also lands in the finite family
    for ell in (2, 3, 4):
        cd = CartanDatum(ell)
        delta = cd.delta_root
        for i in range(1, ell):
            beta = delta - rootsum(tuple(1 if t == i else 0 for t in range(ell + 1)))
            assert classify(beta, ell).tag == "finite"
        beta = delta - rootsum(tuple(1 if t == ell else 0 for t in range(ell + 1)))
        assert classify(beta, ell).tag == "simple"
        for i in range(1, ell):
            pair = [0] * (ell + 1)
            pair[i] = pair[i + 1] = 1
            assert classify(delta - rootsum(pair), ell).tag == "finite"


def test_wild_family_within_height_20():
    for ell in (2, 3, 4, 5):
        for i in range(0, ell + 1, 2):
            k = max(i // 2, 1)
            while True:
                beta = beta_for_max_weight(i, k, ell)
                if beta.height > 20:
                    break
                tag = classify(beta, ell).tag
                if i == 0 and k == 0:
                    expected = "simple"
                elif i == 2 and k == 1:
                    expected = "finite"
                elif i == 0 and k == 1 and ell == 2:
                    expected = "tame"
                else:
                    expected = "wild"
                assert tag == expected, (ell, i, k)
                k += 1


def test_classification_reports_invariants():
    result = classify(rootsum((1, 2, 1)), 2)
    assert (result.i, result.k) == (0, 1)
    zero = classify(rootsum((0, 1, 0)), 2)
    assert zero.i is None and zero.k is None


# -- Weyl orbit probes --------------------------------------------------------

def test_weyl_orbit_probe_examples():
    assert weyl_orbit_probe(rootsum((1, 0, 0)), 0, 2).k == (0, 0, 0)
    assert weyl_orbit_probe(rootsum((1, 1, 1)), 2, 2).k == (1, 1, 0)


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_weyl_orbit_probe_stepwise_word(ell):
    # the word r_1 r_2 ... r_{ell-1} carries delta - a_ell to a_0; the
    # rightmost reflection acts first
    cd = CartanDatum(ell)
    beta = cd.delta_root - rootsum(tuple(1 if t == ell else 0 for t in range(ell + 1)))
    for i in range(ell - 1, 0, -1):
        beta = weyl_orbit_probe(beta, i, ell)
    assert beta.k == (1,) + (0,) * ell


def test_weyl_orbit_probe_leaving_cone():
    with pytest.raises(ValueError):
        weyl_orbit_probe(rootsum((0, 1, 0)), 1, 2)


def test_classify_constant_on_orbits():
    rng = random.Random(37)
    checked = 0
    while checked < 60:
        ell = rng.choice((2, 3))
        entries = [rng.randrange(3) for _ in range(ell + 1)]
        if sum(entries) > 8:
            continue
        beta = rootsum(entries)
        i = rng.randrange(ell + 1)
        try:
            reflected = weyl_orbit_probe(beta, i, ell)
        except ValueError:
            continue
        assert classify(beta, ell).tag == classify(reflected, ell).tag
        assert simple_count(beta, ell) == simple_count(reflected, ell)
        checked += 1
