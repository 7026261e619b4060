"""Maximal weights, dominantization, and the representation-type classification.

A block at root sum beta is nonzero exactly when L0 - beta lies in the weight
system; its dominant Weyl representative then has the form L0 + varpi_i - k*delta
for a unique even i and integer k >= i/2, and the pair (i, k) decides the
representation type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import grdim
from .cartan import CartanDatum, RootSum, Weight


class DominantizationAborted(RuntimeError):
    """The reflection walk exceeded its step bound; indicates a bug, not data."""


@dataclass(frozen=True)
class MaxWeightDatum:
    """A dominant maximal weight L0 + varpi_i - (i/2)*delta, i even."""

    i: int
    weight: Weight


@dataclass(frozen=True)
class Classification:
    """Representation type of a block: tag plus the orbit invariants (i, k)."""

    tag: str  # zero | simple | finite | tame | wild
    i: int | None = None
    k: int | None = None


def max_dominant_weights(ell: int) -> list[MaxWeightDatum]:
    """The dominant maximal weights, one for each even index 0 <= i <= ell.

    Each entry is checked dominant, and checked maximal: the deficit of
    weight + delta either leaves the positive cone or carries a zero block.
    """
    cd = CartanDatum(ell)
    out = []
    for i in range(0, ell + 1, 2):
        weight = cd.lambda0 + cd.varpi(i) - cd.delta.scaled(Fraction(i, 2))
        for j in range(ell + 1):
            assert cd.pairing(j, weight) >= 0, f"non-dominant candidate at i={i}"
        shifted_deficit = cd.deficit(weight + cd.delta)
        assert shifted_deficit is None or not grdim.graded_dim_beta(shifted_deficit, ell), \
            f"candidate at i={i} is not maximal"
        out.append(MaxWeightDatum(i, weight))
    return out


def beta_for_max_weight(i: int, k, ell: int) -> RootSum:
    """The root sum k*delta - varpi_i (requires i even, k >= i/2)."""
    if i % 2 != 0:
        raise ValueError(f"index i must be even, got {i}")
    cd = CartanDatum(ell)
    diff = cd.delta.scaled(k) - cd.varpi(i)
    entries = []
    for c in diff.alpha:
        if c.denominator != 1 or c < 0:
            raise ValueError(f"k*delta - varpi_{i} is not a root sum for k={k}")
        entries.append(int(c))
    return RootSum(tuple(entries))


def dominantize(weight: Weight, ell: int) -> tuple[Weight, list[int]]:
    """Walk a level-one weight into the dominant chamber.

    Reflects at the smallest index with negative pairing until none remains;
    returns the dominant representative and the reflection word. Aborts past
    an engineering step bound, which no legal input should reach.
    """
    cd = CartanDatum(ell)
    if weight.c0 != 1:
        raise ValueError(f"dominantize expects a level-one weight, got level {weight.c0}")
    if any(c.denominator != 1 for c in weight.alpha):
        raise ValueError("dominantize expects integral root coefficients")
    size = sum(abs(int(c)) for c in weight.alpha)
    bound = 10 * (size + ell) ** 2 + 10
    word: list[int] = []
    current = weight
    for _ in range(bound):
        negative = None
        for i in range(ell + 1):
            if cd.pairing(i, current) < 0:
                negative = i
                break
        if negative is None:
            return current, word
        current = cd.reflect(negative, current)
        word.append(negative)
    raise DominantizationAborted(
        f"no dominant representative within {bound} reflections of {weight}")


def weight_decompose(beta: RootSum, ell: int) -> tuple[int, int] | None:
    """Express L0 - beta as w(L0 + varpi_i) - k*delta, or None.

    Returns (i, k) with i even and k >= i/2 when L0 - beta belongs to the
    weight system; None means the block at beta is zero.
    """
    cd = CartanDatum(ell)
    cd._check_rootsum(beta)
    dominant, _ = dominantize(cd.lambda0 - cd.root_weight(beta), ell)
    pairings = [cd.pairing(j, dominant) for j in range(ell + 1)]
    nonzero = [j for j, p in enumerate(pairings) if p]
    if len(nonzero) != 1 or pairings[nonzero[0]] != 1:
        return None
    i = nonzero[0]
    if i % 2 != 0:
        return None
    k = -dominant.alpha[0]
    assert k.denominator == 1, f"non-integral delta shift {k} at beta={beta}"
    k = int(k)
    expected = cd.lambda0 + cd.varpi(i) - cd.delta.scaled(k)
    assert dominant == expected, \
        f"dominant representative of {beta} does not match the maximal family"
    if k < i // 2:
        return None
    return i, k


def classify(beta: RootSum, ell: int) -> Classification:
    """Representation type of the block at beta.

    zero when the block vanishes; otherwise simple for (i, k) = (0, 0),
    finite for (2, 1), tame for (0, 1) at ell = 2, and wild in every other
    case.
    """
    decomposition = weight_decompose(beta, ell)
    if decomposition is None:
        return Classification("zero")
    i, k = decomposition
    if i == 0 and k == 0:
        return Classification("simple", i, k)
    if i == 2 and k == 1:
        return Classification("finite", i, k)
    if i == 0 and k == 1 and ell == 2:
        return Classification("tame", i, k)
    return Classification("wild", i, k)


def weyl_orbit_probe(beta: RootSum, i: int, ell: int) -> RootSum:
    """The root sum beta' with L0 - beta' = r_i(L0 - beta).

    Raises if the reflection leaves the positive cone. Block invariants
    (simple count, representation type) agree across the reflection.
    """
    cd = CartanDatum(ell)
    cd._check_rootsum(beta)
    p = cd.pairing(i, cd.lambda0 - cd.root_weight(beta))
    assert p.denominator == 1
    entries = list(beta.k)
    entries[i] += int(p)
    if entries[i] < 0:
        raise ValueError(
            f"reflection r_{i} carries {beta} outside the positive cone")
    return RootSum(tuple(entries))
