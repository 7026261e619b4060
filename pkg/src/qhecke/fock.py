"""The q-deformed Fock space of affine type C and its crystal.

Basis vectors are Young diagrams. The operator e_i removes i-nodes with
weight q^(d_below) and f_i adds i-nodes with weight q^(-d_above); the
crystal operators follow the reduced i-signature rule.
"""

from __future__ import annotations

import threading as _threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .cartan import CartanDatum, RootSum, Weight
from .qpoly import QLaurent
from .young import (
    Node,
    Partition,
    add_node,
    addable_nodes,
    as_partition,
    content,
    d_above,
    d_below,
    d_total,
    remove_node,
    removable_nodes,
)


class FockVector:
    """A finite formal sum of partitions with QLaurent coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[Partition, QLaurent] | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[Partition, QLaurent] = {}
        for p, c in items:
            p = as_partition(p)
            if not isinstance(c, QLaurent):
                c = QLaurent({0: int(c)})
            s = acc.get(p, QLaurent.zero()) + c
            if s:
                acc[p] = s
            else:
                acc.pop(p, None)
        object.__setattr__(self, "_coeffs", acc)

    def __setattr__(self, name, value):
        raise AttributeError("FockVector is immutable")

    @classmethod
    def zero(cls) -> "FockVector":
        return cls()

    @classmethod
    def basis(cls, p: Partition) -> "FockVector":
        return cls({as_partition(p): QLaurent.one()})

    def coefficient(self, p: Partition) -> QLaurent:
        return self._coeffs.get(as_partition(p), QLaurent.zero())

    def items(self) -> tuple[tuple[Partition, QLaurent], ...]:
        return tuple(sorted(self._coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0])))

    def support(self) -> tuple[Partition, ...]:
        return tuple(p for p, _ in self.items())

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self._coeffs)
        for p, c in other._coeffs.items():
            s = out.get(p, QLaurent.zero()) + c
            if s:
                out[p] = s
            else:
                out.pop(p, None)
        return FockVector(out)

    def scaled(self, c) -> "FockVector":
        if not isinstance(c, QLaurent):
            c = QLaurent({0: int(c)})
        return FockVector({p: coeff * c for p, coeff in self._coeffs.items()})

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, FockVector) and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        if not self._coeffs:
            return "FockVector(0)"
        body = " + ".join(f"({c})|{p}>" for p, c in self.items())
        return f"FockVector({body})"


# -- e_i / f_i action ---------------------------------------------------------

def apply_e(i: int, v: FockVector, ell: int) -> FockVector:
    """e_i: each removable i-node b contributes q^(d_below(p, b)) |p - b>."""
    out: dict[Partition, QLaurent] = {}
    for p, c in v.items():
        for b in removable_nodes(p, i, ell):
            target = remove_node(p, b)
            term = c * QLaurent.q_power(d_below(p, b, ell))
            _accumulate(out, target, term)
    return FockVector(out)


def apply_f(i: int, v: FockVector, ell: int) -> FockVector:
    """f_i: each addable i-node b contributes q^(-d_above(p, b)) |p + b>."""
    out: dict[Partition, QLaurent] = {}
    for p, c in v.items():
        for b in addable_nodes(p, i, ell):
            target = add_node(p, b)
            term = c * QLaurent.q_power(-d_above(p, b, ell))
            _accumulate(out, target, term)
    return FockVector(out)


def _accumulate(acc: dict[Partition, QLaurent], p: Partition, term: QLaurent) -> None:
    s = acc.get(p, QLaurent.zero()) + term
    if s:
        acc[p] = s
    else:
        acc.pop(p, None)


def apply_word_f_then_e(nu: Sequence[int], nu_prime: Sequence[int], ell: int) -> QLaurent:
    """Coefficient of the empty diagram in e_{nu_1}...e_{nu_n} f_{nu'_n}...f_{nu'_1} |0>.

    The operator word acts right to left: f_{nu'_1} first, e_{nu_1} last.
    """
    nu = tuple(int(x) for x in nu)
    nu_prime = tuple(int(x) for x in nu_prime)
    if len(nu) != len(nu_prime):
        raise ValueError(f"word lengths differ: {len(nu)} vs {len(nu_prime)}")
    vec = _f_word_vector(nu_prime, ell)
    total = QLaurent.zero()
    for p, c in vec.items():
        w = _e_word_empty_coeff(nu, p, ell)
        if w:
            total = total + c * w
    return total


@lru_cache(maxsize=None)
def _f_word_vector(word: tuple[int, ...], ell: int) -> FockVector:
    if not word:
        return FockVector.basis(())
    return apply_f(word[-1], _f_word_vector(word[:-1], ell), ell)


@lru_cache(maxsize=None)
def _e_word_empty_coeff(word: tuple[int, ...], p: Partition, ell: int) -> QLaurent:
    v = FockVector.basis(p)
    for idx in range(len(word) - 1, -1, -1):
        v = apply_e(word[idx], v, ell)
        if not v:
            return QLaurent.zero()
    return v.coefficient(())


# -- crystal operators --------------------------------------------------------

def signature_reduce(p: Partition, i: int, ell: int) -> tuple[list[Node], list[Node]]:
    """Survivors of the i-signature after cancelling (-,+) pairs.

    Addable nodes read as +, removable as -, top to bottom; the reduced word
    has all +'s before all -'s. Returns (surviving addable, surviving
    removable) node lists in row order.
    """
    p = as_partition(p)
    entries = sorted(
        [(b, "+") for b in addable_nodes(p, i, ell)]
        + [(b, "-") for b in removable_nodes(p, i, ell)],
        key=lambda e: e[0].row,
    )
    stack: list[tuple[Node, str]] = []
    for node, sign in entries:
        if sign == "+" and stack and stack[-1][1] == "-":
            stack.pop()
        else:
            stack.append((node, sign))
    plus = [node for node, sign in stack if sign == "+"]
    minus = [node for node, sign in stack if sign == "-"]
    return plus, minus


def eps(p: Partition, i: int, ell: int) -> int:
    """Number of surviving -'s in the reduced i-signature."""
    return len(signature_reduce(p, i, ell)[1])


def phi(p: Partition, i: int, ell: int) -> int:
    """Number of surviving +'s in the reduced i-signature."""
    return len(signature_reduce(p, i, ell)[0])


def crystal_f(p: Partition, i: int, ell: int) -> Partition | None:
    """Add a node at the right-most surviving +, or None if none survives."""
    plus, _ = signature_reduce(p, i, ell)
    if not plus:
        return None
    return add_node(as_partition(p), plus[-1])


def crystal_e(p: Partition, i: int, ell: int) -> Partition | None:
    """Remove the node at the left-most surviving -, or None if none survives."""
    _, minus = signature_reduce(p, i, ell)
    if not minus:
        return None
    return remove_node(as_partition(p), minus[0])


# -- generated highest weight crystal ----------------------------------------

@dataclass(frozen=True)
class CrystalVertex:
    partition: Partition
    weight: Weight
    eps: tuple[int, ...]
    phi: tuple[int, ...]


class CrystalGraph:
    """The part of the crystal generated from the empty diagram.

    Vertices are all partitions reachable by words of lowering operators of
    length <= depth; edges carry the operator index. A secondary index maps
    each RootSum beta to the vertices of weight L0 - beta.
    """

    def __init__(self, ell: int, depth: int, vertices: dict[Partition, CrystalVertex],
                 edges: tuple[tuple[Partition, Partition, int], ...]):
        self.ell = ell
        self.depth = depth
        self.vertices = vertices
        self.edges = edges
        by_content: dict[RootSum, list[Partition]] = {}
        for p in vertices:
            by_content.setdefault(content(p, ell), []).append(p)
        self._by_content = {
            beta: tuple(sorted(ps, key=lambda q: (sum(q), q)))
            for beta, ps in by_content.items()
        }

    def vertices_sorted(self) -> list[CrystalVertex]:
        return [self.vertices[p]
                for p in sorted(self.vertices, key=lambda q: (sum(q), q))]

    def edges_sorted(self) -> list[tuple[Partition, Partition, int]]:
        return sorted(self.edges, key=lambda e: (sum(e[0]), e[0], e[2]))

    def vertices_at(self, beta: RootSum) -> list[CrystalVertex]:
        """Vertices of weight L0 - beta, sorted by (size, lex)."""
        return [self.vertices[p] for p in self._by_content.get(beta, ())]

    def to_json_obj(self) -> dict:
        return {
            "ell": self.ell,
            "depth": self.depth,
            "vertices": [
                {
                    "partition": list(v.partition),
                    "weight": v.weight.to_json(),
                    "eps": list(v.eps),
                    "phi": list(v.phi),
                }
                for v in self.vertices_sorted()
            ],
            "edges": [
                {"from": list(src), "to": list(dst), "i": i}
                for src, dst, i in self.edges_sorted()
            ],
        }

    def to_dot(self) -> str:
        lines = ["digraph crystal {", "  rankdir=TB;"]
        for v in self.vertices_sorted():
            lines.append(
                f'  "{_plabel(v.partition)}" '
                f'[label="{_plabel(v.partition)}\\n{v.weight.text()}"];'
            )
        for src, dst, i in self.edges_sorted():
            lines.append(f'  "{_plabel(src)}" -> "{_plabel(dst)}" [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _plabel(p: Partition) -> str:
    return ",".join(str(x) for x in p) if p else "()"


def generate_highest_weight_crystal(ell: int, depth: int) -> CrystalGraph:
    """All vertices reachable from the empty diagram by lowering words of
    length <= depth, with operator-labelled edges.

    Levels are grown once per rank and shared between calls, so asking for a
    deeper graph only pays for the new levels.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    return _graph_view(ell, depth)


class _CrystalState:
    """Per-rank growing record of crystal levels; guarded by a lock."""

    def __init__(self, ell: int):
        self.cd = CartanDatum(ell)
        self.levels: list[dict[Partition, CrystalVertex]] = [
            {(): _make_vertex((), self.cd)}
        ]
        self.edge_levels: list[tuple[tuple[Partition, Partition, int], ...]] = []

    def extend_to(self, depth: int) -> None:
        ell = self.cd.ell
        while len(self.levels) - 1 < depth:
            current = self.levels[-1]
            grown: dict[Partition, CrystalVertex] = {}
            edges: list[tuple[Partition, Partition, int]] = []
            for p in current:
                for i in range(ell + 1):
                    target = crystal_f(p, i, ell)
                    if target is None:
                        continue
                    edges.append((p, target, i))
                    if target not in grown:
                        grown[target] = _make_vertex(target, self.cd)
            self.edge_levels.append(tuple(edges))
            self.levels.append(grown)


_states: dict[int, _CrystalState] = {}
_states_lock = _threading.Lock()


@lru_cache(maxsize=128)
def _graph_view(ell: int, depth: int) -> CrystalGraph:
    with _states_lock:
        state = _states.get(ell)
        if state is None:
            state = _states[ell] = _CrystalState(ell)
        state.extend_to(depth)
        vertices: dict[Partition, CrystalVertex] = {}
        for level in state.levels[: depth + 1]:
            vertices.update(level)
        edges: list[tuple[Partition, Partition, int]] = []
        for level_edges in state.edge_levels[:depth]:
            edges.extend(level_edges)
    return CrystalGraph(ell, depth, vertices, tuple(edges))


def _make_vertex(p: Partition, cd: CartanDatum) -> CrystalVertex:
    ell = cd.ell
    eps_vec = []
    phi_vec = []
    for i in range(ell + 1):
        plus, minus = signature_reduce(p, i, ell)
        eps_vec.append(len(minus))
        phi_vec.append(len(plus))
    weight = cd.lambda0 - cd.root_weight(content(p, ell))
    for i in range(ell + 1):
        assert phi_vec[i] - eps_vec[i] == d_total(p, i, ell) == cd.pairing(i, weight), \
            f"crystal bookkeeping broken at {p}, i={i}"
    return CrystalVertex(p, weight, tuple(eps_vec), tuple(phi_vec))
