"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every expected value is exact, no tolerances anywhere.
"""

import math
import random
import time
from fractions import Fraction

from qhecke.cartan import CartanDatum, RootSum
from qhecke.fock import generate_highest_weight_crystal
from qhecke.grdim import (
    graded_dim,
    graded_dim_beta,
    graded_dim_n,
    idempotent_nonzero,
    oracle_graded_dim,
    simple_count,
    words_in_i_beta,
)
from qhecke.qpoly import QLaurent
from qhecke.reptype import (
    beta_for_max_weight,
    classify,
    max_dominant_weights,
    weight_decompose,
    weyl_orbit_probe,
)
from qhecke.young import codeg, content, deg, partitions_of, standard_tableaux

from oracles import compositions


def report(number, name, detail=""):
    suffix = f" ({detail})" if detail else ""
    print(f"criterion {number:02d} {name}: PASS{suffix}")


def test_c01_factorial_identity():
    started = time.monotonic()
    for ell in (2, 3, 4):
        for n in range(9):
            assert graded_dim_n(n, ell).eval_at_one() == math.factorial(n)
    elapsed = time.monotonic() - started
    assert elapsed < 30.0
    report(1, "factorial-identity", f"n <= 8, ell in 2..4, {elapsed:.1f}s")


def test_c02_small_graded_dimension():
    expected = QLaurent({0: 1, 2: 1})
    for ell in (2, 3, 4):
        beta = RootSum((1, 1) + (0,) * (ell - 1))
        assert graded_dim(beta, (0, 1), (0, 1), ell) == expected
    report(2, "two-node-block", "1 + q^2 at every rank")


def test_c03_delta_block_data_ell2():
    delta = RootSum((1, 2, 1))
    assert graded_dim(delta, (0, 1, 2, 1), (0, 1, 2, 1), 2).eval_at_one() == 4
    assert graded_dim_beta(RootSum((1, 1, 1)), 2).eval_at_one() == 2
    report(3, "delta-block-ell2", "4 and 2")


def test_c04_deg_codeg_identity():
    started = time.monotonic()
    checked = 0
    for ell in (2, 3, 4):
        cd = CartanDatum(ell)
        for n in range(9):
            for p in partitions_of(n):
                expected = cd.defect(content(p, ell))
                for t in standard_tableaux(p):
                    assert deg(t, ell) + codeg(t, ell) == expected
                    checked += 1
    elapsed = time.monotonic() - started
    assert elapsed < 60.0
    report(4, "deg-plus-codeg-is-defect", f"{checked} tableaux, {elapsed:.1f}s")


def test_c05_oracle_equivalence():
    checked = 0
    for ell in (2, 3, 4):
        for n in range(6):
            for comp in compositions(n, ell + 1):
                beta = RootSum(comp)
                words = list(words_in_i_beta(beta))
                for nu in words:
                    for nu2 in words:
                        assert oracle_graded_dim(beta, nu, nu2, ell) \
                            == graded_dim(beta, nu, nu2, ell)
                        checked += 1
    rng = random.Random(20260810)
    extra = 0
    while extra < 100:
        ell = rng.choice((2, 3, 4))
        n = rng.choice((6, 7))
        cuts = sorted(rng.randrange(n + 1) for _ in range(ell))
        comp = tuple(b - a for a, b in zip((0, *cuts), (*cuts, n)))
        beta = RootSum(comp)
        letters = [i for i, k in enumerate(comp) for _ in range(k)]
        nu = letters[:]
        nu2 = letters[:]
        rng.shuffle(nu)
        rng.shuffle(nu2)
        assert oracle_graded_dim(beta, tuple(nu), tuple(nu2), ell) \
            == graded_dim(beta, tuple(nu), tuple(nu2), ell)
        extra += 1
    report(5, "oracle-equivalence",
           f"{checked} exhaustive pairs, {extra} random triples")


def test_c06_crystal_weight_space_data():
    graph = generate_highest_weight_crystal(4, 8)
    beta0 = RootSum((2, 3, 2, 1, 0))
    found = {v.partition: v for v in graph.vertices_at(beta0)}
    assert set(found) == {(3, 2, 2, 1), (2, 2, 2, 2)}
    eps1 = found[(3, 2, 2, 1)].eps
    eps2 = found[(2, 2, 2, 2)].eps
    assert [i for i, e in enumerate(eps1) if e] == [1, 3]
    assert all(e in (0, 1) for e in eps1)
    assert [i for i, e in enumerate(eps2) if e] == [2]
    assert all(e in (0, 1) for e in eps2)
    report(6, "crystal-at-2delta-minus-varpi4", "two vertices, eps as stated")


def test_c07_simple_count_at_delta():
    for ell in (2, 3, 4, 5):
        assert simple_count(CartanDatum(ell).delta_root, ell) == ell
    report(7, "simple-count-at-delta", "equals the rank parameter")


def test_c08_maximal_weights():
    for ell in range(2, 7):
        cd = CartanDatum(ell)
        data = max_dominant_weights(ell)
        assert [item.i for item in data] == list(range(0, ell + 1, 2))
        for item in data:
            i = item.i
            expected = cd.lambda0 + cd.varpi(i) - cd.delta.scaled(Fraction(i, 2))
            assert item.weight == expected
            for j in range(ell + 1):
                assert cd.pairing(j, item.weight) >= 0
            staircase = (i,) * (i // 2)
            assert cd.lambda0 - cd.root_weight(content(staircase, ell)) == item.weight
    report(8, "maximal-dominant-weights", "ranks 2..6, staircases agree")


def test_c09_classification_table():
    assert classify(RootSum((0, 0, 0)), 2).tag == "simple"
    for ell in (2, 3, 4):
        assert classify(RootSum((1, 1) + (0,) * (ell - 1)), ell).tag == "finite"
    assert classify(RootSum((1, 2, 1)), 2).tag == "tame"
    for ell in (3, 4, 5):
        assert classify(CartanDatum(ell).delta_root, ell).tag == "wild"
    assert classify(beta_for_max_weight(2, 2, 2), 2).tag == "wild"
    for ell in (2, 3, 4):
        assert classify(CartanDatum(ell).delta_root.scaled(2), ell).tag == "wild"
    assert classify(beta_for_max_weight(4, 2, 4), 4).tag == "wild"
    sampled = 0
    for ell in (2, 3, 4, 5, 6):
        for i in range(0, ell + 1, 2):
            k = i // 2
            while True:
                beta = beta_for_max_weight(i, k, ell)
                if beta.height > 20:
                    break
                tag = classify(beta, ell).tag
                if (i, k) == (0, 0):
                    assert tag == "simple"
                elif (i, k) == (2, 1):
                    assert tag == "finite"
                elif (i, k) == (0, 1) and ell == 2:
                    assert tag == "tame"
                else:
                    assert tag == "wild", (ell, i, k)
                sampled += 1
                k += 1
    report(9, "classification-table", f"{sampled} family members checked")


def test_c10_weyl_orbit_invariance():
    rng = random.Random(1234)
    checked = 0
    while checked < 200:
        ell = rng.choice((2, 3, 4))
        n = rng.randrange(9)
        cuts = sorted(rng.randrange(n + 1) for _ in range(ell))
        beta = RootSum(tuple(b - a for a, b in zip((0, *cuts), (*cuts, n))))
        i = rng.randrange(ell + 1)
        try:
            reflected = weyl_orbit_probe(beta, i, ell)
        except ValueError:
            continue
        assert simple_count(beta, ell) == simple_count(reflected, ell)
        assert classify(beta, ell).tag == classify(reflected, ell).tag
        checked += 1
    report(10, "weyl-orbit-invariance", "200 reflections")


def test_c11_negative_controls():
    alpha1 = RootSum((0, 1, 0))
    assert graded_dim_beta(alpha1, 2) == QLaurent.zero()
    assert weight_decompose(alpha1, 2) is None
    assert not idempotent_nonzero((1,), 2)
    report(11, "negative-controls", "alpha_1 block vanishes")
