"""Graded dimensions of the level-one cyclotomic quotients.

The dimension formula sums, over partitions whose node content matches the
root sum beta, products of graded tableau counts; an independent route
through the Fock space operators cross-checks every value.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .cartan import CartanDatum, RootSum, Weight
from .qpoly import QLaurent
from .young import (
    Partition,
    addable_nodes,
    as_partition,
    content,
    d_below,
    add_node,
    deg,
    partitions_of,
    residue,
    standard_tableaux,
)
from . import fock


def as_residue_word(seq: Sequence[int], ell: int) -> tuple[int, ...]:
    """Validate a word over the index set 0..ell."""
    word = tuple(int(x) for x in seq)
    for x in word:
        if not 0 <= x <= ell:
            raise ValueError(f"residue {x} out of range 0..{ell}")
    return word


def word_content(nu: Sequence[int], ell: int) -> RootSum:
    """The root sum with k[i] = multiplicity of i in nu."""
    word = as_residue_word(nu, ell)
    counts = [0] * (ell + 1)
    for x in word:
        counts[x] += 1
    return RootSum(tuple(counts))


def _require_in_i_beta(nu: Sequence[int], beta: RootSum, ell: int, name: str) -> tuple[int, ...]:
    word = as_residue_word(nu, ell)
    if word_content(word, ell) != beta:
        raise ValueError(f"{name}={word} is not a word of content {beta}")
    return word


def words_in_i_beta(beta: RootSum):
    """All words of content beta, in lexicographic order."""
    counts = list(beta.k)
    word: list[int] = []
    total = beta.height

    def rec():
        if len(word) == total:
            yield tuple(word)
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                word.append(i)
                yield from rec()
                word.pop()
                counts[i] += 1

    yield from rec()


# -- graded tableau counts ----------------------------------------------------

def kostka_q(p: Partition, nu: Sequence[int], ell: int) -> QLaurent:
    """Sum of q^deg(T) over standard tableaux of shape p with residue word nu."""
    p = as_partition(p)
    nu = as_residue_word(nu, ell)
    if sum(p) != len(nu):
        raise ValueError(f"shape size {sum(p)} != residue word length {len(nu)}")
    return _kostka_q(p, nu, ell)


@lru_cache(maxsize=None)
def _kostka_q(p: Partition, nu: tuple[int, ...], ell: int) -> QLaurent:
    # Backtracking over growth chains, memoized on the prefix shape; the
    # residue filter prunes a branch as soon as the next entry cannot match.
    n = sum(p)
    target_rows = len(p)
    memo: dict[Partition, QLaurent] = {}

    def rec(prefix: Partition) -> QLaurent:
        k = sum(prefix)
        if k == n:
            return QLaurent.one()
        cached = memo.get(prefix)
        if cached is not None:
            return cached
        total = QLaurent.zero()
        for b in addable_nodes(prefix, nu[k], ell):
            if b.row > target_rows or prefix_len(prefix, b.row) >= p[b.row - 1]:
                continue
            grown = add_node(prefix, b)
            total = total + QLaurent.q_power(d_below(grown, b, ell)) * rec(grown)
        memo[prefix] = total
        return total

    def prefix_len(prefix: Partition, row: int) -> int:
        return prefix[row - 1] if row <= len(prefix) else 0

    return rec(())


def kostka_q_total(p: Partition, ell: int) -> QLaurent:
    """Sum of q^deg(T) over all standard tableaux of shape p."""
    return _kostka_q_total(as_partition(p), ell)


@lru_cache(maxsize=None)
def _kostka_q_total(p: Partition, ell: int) -> QLaurent:
    total = QLaurent.zero()
    for t in standard_tableaux(p):
        total = total + QLaurent.q_power(deg(t, ell))
    return total


# -- dimension formula ----------------------------------------------------

def partitions_with_content(beta: RootSum, ell: int) -> tuple[Partition, ...]:
    """Partitions of |beta| whose node content equals beta."""
    return tuple(p for p in partitions_of(beta.height) if content(p, ell) == beta)


def graded_dim(beta: RootSum, nu: Sequence[int], nu2: Sequence[int], ell: int) -> QLaurent:
    """dim_q of the (nu, nu2) idempotent-truncated block at root sum beta."""
    nu = _require_in_i_beta(nu, beta, ell, "nu")
    nu2 = _require_in_i_beta(nu2, beta, ell, "nu2")
    total = QLaurent.zero()
    for p in partitions_with_content(beta, ell):
        total = total + kostka_q(p, nu, ell) * kostka_q(p, nu2, ell)
    return total


def graded_dim_beta(beta: RootSum, ell: int) -> QLaurent:
    """dim_q of the whole block at root sum beta; zero signals a zero algebra."""
    total = QLaurent.zero()
    for p in partitions_with_content(beta, ell):
        k = kostka_q_total(p, ell)
        total = total + k * k
    return total


def graded_dim_n(n: int, ell: int) -> QLaurent:
    """dim_q of the full degree-n algebra; evaluates to n! at q = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = QLaurent.zero()
    for p in partitions_of(n):
        k = kostka_q_total(p, ell)
        total = total + k * k
    return total


def idempotent_nonzero(nu: Sequence[int], ell: int) -> bool:
    """True iff some standard tableau realizes nu as its residue sequence."""
    word = as_residue_word(nu, ell)
    shapes: set[Partition] = {()}
    for x in word:
        grown = {add_node(p, b) for p in shapes for b in addable_nodes(p, x, ell)}
        if not grown:
            return False
        shapes = grown
    return True


def oracle_graded_dim(beta: RootSum, nu: Sequence[int], nu2: Sequence[int], ell: int) -> QLaurent:
    """Independent Fock-space route: q^defect(beta) times the operator-word
    coefficient of the empty diagram. Must agree with graded_dim everywhere."""
    nu = _require_in_i_beta(nu, beta, ell, "nu")
    nu2 = _require_in_i_beta(nu2, beta, ell, "nu2")
    cd = CartanDatum(ell)
    word_value = fock.apply_word_f_then_e(nu, nu2, ell)
    return word_value.shifted(cd.defect(beta))


def simple_count(beta: RootSum, ell: int) -> int:
    """Number of generated-crystal vertices of weight L0 - beta."""
    graph = fock.generate_highest_weight_crystal(ell, beta.height)
    return len(graph.vertices_at(beta))


def is_weight(weight: Weight, ell: int) -> bool:
    """Weight membership for the level-one highest weight module, via the
    dimension formula: nonzero block dimension at the deficit root sum."""
    cd = CartanDatum(ell)
    beta = cd.deficit(weight)
    if beta is None:
        return False
    return bool(graded_dim_beta(beta, ell))
