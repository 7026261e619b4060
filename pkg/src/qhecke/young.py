"""Young diagrams with the affine type C residue pattern.

Partitions are weakly decreasing tuples of positive integers in English
notation: row 1 on top, "below" always means a strictly larger row index.
The residue of the node in row p, column q is read off the periodic pattern
0, 1, ..., ell-1, ell, ell-1, ..., 1 along diagonals.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from . import cartan
from .cartan import RootSum

Partition = tuple[int, ...]


class Node(NamedTuple):
    row: int
    col: int


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate and canonicalize a partition (trailing zeros stripped)."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(p[j] < p[j + 1] for j in range(len(p) - 1)):
        raise ValueError(f"partition parts must weakly decrease: {parts}")
    return p


@lru_cache(maxsize=None)
def residue_pattern(ell: int) -> tuple[int, ...]:
    """The period-2*ell sequence 0, 1, ..., ell, ell-1, ..., 1."""
    if ell < 2:
        raise ValueError(f"rank parameter must be >= 2, got {ell}")
    return tuple(range(ell + 1)) + tuple(range(ell - 1, 0, -1))


def residue(node: tuple[int, int], ell: int) -> int:
    """Residue of the node at (row, col); constant along diagonals."""
    row, col = node
    pattern = residue_pattern(ell)
    return pattern[(col - row) % (2 * ell)]


# -- nodes of a diagram -----------------------------------------------------

def addable_corners(p: Partition) -> list[Node]:
    """All nodes whose addition leaves a Young diagram, top to bottom."""
    out = []
    for j in range(len(p)):
        if j == 0 or p[j - 1] > p[j]:
            out.append(Node(j + 1, p[j] + 1))
    out.append(Node(len(p) + 1, 1))
    return out


def removable_corners(p: Partition) -> list[Node]:
    """All nodes whose removal leaves a Young diagram, top to bottom."""
    out = []
    for j in range(len(p)):
        if j == len(p) - 1 or p[j] > p[j + 1]:
            out.append(Node(j + 1, p[j]))
    return out


def addable_nodes(p: Partition, i: int, ell: int) -> list[Node]:
    """Addable nodes of residue i, ordered by increasing row."""
    return [b for b in addable_corners(p) if residue(b, ell) == i]


def removable_nodes(p: Partition, i: int, ell: int) -> list[Node]:
    """Removable nodes of residue i, ordered by increasing row."""
    return [b for b in removable_corners(p) if residue(b, ell) == i]


def add_node(p: Partition, b: tuple[int, int]) -> Partition:
    row, col = b
    if row == len(p) + 1 and col == 1:
        return p + (1,)
    if not (1 <= row <= len(p) and col == p[row - 1] + 1):
        raise ValueError(f"node {b} is not addable to {p}")
    if row > 1 and p[row - 2] < col:
        raise ValueError(f"node {b} is not addable to {p}")
    return p[: row - 1] + (p[row - 1] + 1,) + p[row:]


def remove_node(p: Partition, b: tuple[int, int]) -> Partition:
    row, col = b
    if not (1 <= row <= len(p) and col == p[row - 1]):
        raise ValueError(f"node {b} is not removable from {p}")
    if row < len(p) and p[row] == col:
        raise ValueError(f"node {b} is not removable from {p}")
    new = p[: row - 1] + (p[row - 1] - 1,) + p[row:]
    while new and new[-1] == 0:
        new = new[:-1]
    return new


# -- node statistics --------------------------------------------------------

def _require_corner(p: Partition, b: Node) -> None:
    if b not in addable_corners(p) and b not in removable_corners(p):
        raise ValueError(f"node {tuple(b)} is neither addable nor removable in {p}")


def d_below(p: Partition, b: tuple[int, int], ell: int) -> int:
    """d_i * (#addable minus #removable i-nodes strictly below b), i = res(b)."""
    b = Node(*b)
    _require_corner(p, b)
    i = residue(b, ell)
    add = sum(1 for c in addable_nodes(p, i, ell) if c.row > b.row)
    rem = sum(1 for c in removable_nodes(p, i, ell) if c.row > b.row)
    return cartan.symmetrizer(ell)[i] * (add - rem)


def d_above(p: Partition, b: tuple[int, int], ell: int) -> int:
    """d_i * (#addable minus #removable i-nodes strictly above b), i = res(b)."""
    b = Node(*b)
    _require_corner(p, b)
    i = residue(b, ell)
    add = sum(1 for c in addable_nodes(p, i, ell) if c.row < b.row)
    rem = sum(1 for c in removable_nodes(p, i, ell) if c.row < b.row)
    return cartan.symmetrizer(ell)[i] * (add - rem)


def d_total(p: Partition, i: int, ell: int) -> int:
    """#addable i-nodes minus #removable i-nodes (unscaled)."""
    return len(addable_nodes(p, i, ell)) - len(removable_nodes(p, i, ell))


def content(p: Partition, ell: int) -> RootSum:
    """The RootSum beta with k[i] = number of i-nodes of the diagram."""
    return _content(as_partition(p), ell)


@lru_cache(maxsize=None)
def _content(p: Partition, ell: int) -> RootSum:
    counts = [0] * (ell + 1)
    for row, length in enumerate(p, start=1):
        for col in range(1, length + 1):
            counts[residue((row, col), ell)] += 1
    return RootSum(tuple(counts))


# -- standard tableaux ------------------------------------------------------

class StandardTableau:
    """A standard filling of a Young diagram with 1..n.

    Entries increase along rows and down columns; every prefix of entries
    then automatically forms a partition shape.
    """

    __slots__ = ("rows", "_node_of")

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        shape = as_partition(tuple(len(r) for r in rows))
        if len(shape) != len(rows):
            raise ValueError("rows of a tableau must be nonempty")
        n = sum(shape)
        node_of: dict[int, Node] = {}
        for r, row in enumerate(rows, start=1):
            for c, entry in enumerate(row, start=1):
                if entry in node_of:
                    raise ValueError(f"duplicate entry {entry}")
                node_of[entry] = Node(r, c)
        if sorted(node_of) != list(range(1, n + 1)):
            raise ValueError("entries must be exactly 1..n")
        for r, row in enumerate(rows):
            for c in range(1, len(row)):
                if row[c - 1] >= row[c]:
                    raise ValueError("rows must increase left to right")
            if r + 1 < len(rows):
                for c in range(len(rows[r + 1])):
                    if rows[r][c] >= rows[r + 1][c]:
                        raise ValueError("columns must increase top to bottom")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_node_of", node_of)

    def __setattr__(self, name, value):
        raise AttributeError("StandardTableau is immutable")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def node_of_entry(self, k: int) -> Node:
        return self._node_of[k]

    def growth(self) -> Iterator[tuple[Node, Partition]]:
        """Yield (node of entry k, prefix shape before adding it) for k = 1..n."""
        prefix = [0] * len(self.rows)
        for k in range(1, self.size + 1):
            node = self._node_of[k]
            yield node, _strip(prefix)
            prefix[node.row - 1] += 1

    def residue_sequence(self, ell: int) -> tuple[int, ...]:
        return tuple(residue(self._node_of[k], ell) for k in range(1, self.size + 1))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other) -> bool:
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"StandardTableau({[list(r) for r in self.rows]})"

    def __str__(self) -> str:
        width = len(str(self.size))
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.rows)


def _strip(prefix: list[int]) -> Partition:
    n = len(prefix)
    while n and prefix[n - 1] == 0:
        n -= 1
    return tuple(prefix[:n])


def residue_sequence(t: StandardTableau, ell: int) -> tuple[int, ...]:
    """(res_1(T), ..., res_n(T)) with res_k the residue of the entry-k node."""
    return t.residue_sequence(ell)


def standard_tableaux(p: Partition) -> Iterator[StandardTableau]:
    """All standard tableaux of shape p, lexicographic in the sequence of
    node positions of entries 1..n."""
    yield from _enumerate_tableaux(as_partition(p), None, 0)


def standard_tableaux_with_residues(
    p: Partition, nu: Sequence[int], ell: int
) -> Iterator[StandardTableau]:
    """Standard tableaux of shape p whose residue sequence equals nu.

    Branches are pruned as soon as the forced residue of the next entry
    cannot match; the order is the subsequence of standard_tableaux order.
    """
    p = as_partition(p)
    nu = tuple(int(x) for x in nu)
    if len(nu) != sum(p):
        raise ValueError(f"residue word length {len(nu)} != diagram size {sum(p)}")
    yield from _enumerate_tableaux(p, nu, ell)


def _enumerate_tableaux(
    p: Partition, nu: tuple[int, ...] | None, ell: int
) -> Iterator[StandardTableau]:
    n = sum(p)
    prefix = [0] * len(p)
    positions: list[Node] = []

    def rec(k: int) -> Iterator[StandardTableau]:
        if k == n:
            rows = [[0] * part for part in p]
            for entry, node in enumerate(positions, start=1):
                rows[node.row - 1][node.col - 1] = entry
            yield StandardTableau(rows)
            return
        for j in range(len(p)):
            if prefix[j] >= p[j]:
                continue
            if j > 0 and prefix[j - 1] <= prefix[j]:
                continue
            node = Node(j + 1, prefix[j] + 1)
            if nu is not None and residue(node, ell) != nu[k]:
                continue
            prefix[j] += 1
            positions.append(node)
            yield from rec(k + 1)
            positions.pop()
            prefix[j] -= 1

    yield from rec(0)


@lru_cache(maxsize=None)
def count_standard_tableaux(p: Partition) -> int:
    """Number of standard tableaux, by memoized recursion over prefixes."""
    p = as_partition(p)
    if not p:
        return 1
    return sum(count_standard_tableaux(remove_node(p, b)) for b in removable_corners(p))


# -- degree statistics ------------------------------------------------------

def deg(t: StandardTableau, ell: int) -> int:
    """Sum over entries of d_below on the shape just after each node is added."""
    total = 0
    for node, before in t.growth():
        total += d_below(add_node(before, node), node, ell)
    return total


def codeg(t: StandardTableau, ell: int) -> int:
    """Sum over entries of d_above on the shape just before each node is added."""
    total = 0
    for node, before in t.growth():
        total += d_above(before, node, ell)
    return total


# -- partition enumeration --------------------------------------------------

@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []

    def rec(remaining: int, cap: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for first in range(min(remaining, cap), 0, -1):
            acc.append(first)
            rec(remaining - first, first, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)
