"""Independent brute-force reference implementations used as test oracles.

Nothing here shares code with the library's statistics: diagram scans work
on explicit cell sets, the residue grid is built by literally shifting the
periodic pattern row by row, and counts come from the hook length product.
"""

from __future__ import annotations

from math import factorial


def cells(p):
    return {(r, c) for r, length in enumerate(p, start=1) for c in range(1, length + 1)}


def naive_addable(p):
    """Outer corners by direct cell-set scanning, sorted by (row, col)."""
    filled = cells(p)
    out = []
    for r in range(1, len(p) + 2):
        for c in range(1, (p[0] + 2 if p else 2)):
            if (r, c) in filled:
                continue
            up_ok = r == 1 or (r - 1, c) in filled
            left_ok = c == 1 or (r, c - 1) in filled
            if up_ok and left_ok:
                out.append((r, c))
    return out


def naive_removable(p):
    filled = cells(p)
    return sorted((r, c) for (r, c) in filled
                  if (r + 1, c) not in filled and (r, c + 1) not in filled)


def naive_residue(row, col, ell):
    """Residue by building row 1 from the repeated pattern and then shifting
    each subsequent row one step to the right."""
    period = list(range(ell + 1)) + list(range(ell - 1, 0, -1))
    blocks = (col + row) // (2 * ell) + 2
    line = (period * blocks)[: blocks * 2 * ell]
    for _ in range(row - 1):
        line = line[-1:] + line[:-1]  # exact because len(line) is a multiple of the period
    return line[col - 1]


def _d_vector(ell):
    return [2] + [1] * (ell - 1) + [2]


def naive_d_below(p, b, ell):
    i = naive_residue(b[0], b[1], ell)
    add = sum(1 for c in naive_addable(p) if c[0] > b[0] and naive_residue(*c, ell) == i)
    rem = sum(1 for c in naive_removable(p) if c[0] > b[0] and naive_residue(*c, ell) == i)
    return _d_vector(ell)[i] * (add - rem)


def naive_d_above(p, b, ell):
    i = naive_residue(b[0], b[1], ell)
    add = sum(1 for c in naive_addable(p) if c[0] < b[0] and naive_residue(*c, ell) == i)
    rem = sum(1 for c in naive_removable(p) if c[0] < b[0] and naive_residue(*c, ell) == i)
    return _d_vector(ell)[i] * (add - rem)


def _shape_of_rows(rows):
    return tuple(len(r) for r in rows)


def _drop_entry(rows, entry):
    out = []
    for row in rows:
        kept = [x for x in row if x != entry]
        if kept:
            out.append(kept)
    return out


def naive_deg(rows, ell):
    """The degree statistic straight from its recursion over entry removal."""
    n = sum(len(r) for r in rows)
    if n == 0:
        return 0
    node = next((r + 1, row.index(n) + 1)
                for r, row in enumerate(rows) if n in row)
    return naive_deg(_drop_entry(rows, n), ell) + naive_d_below(_shape_of_rows(rows), node, ell)


def naive_codeg(rows, ell):
    n = sum(len(r) for r in rows)
    if n == 0:
        return 0
    node = next((r + 1, row.index(n) + 1)
                for r, row in enumerate(rows) if n in row)
    smaller = _drop_entry(rows, n)
    return naive_codeg(smaller, ell) + naive_d_above(_shape_of_rows(smaller), node, ell)


def conjugate(p):
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > c) for c in range(p[0]))


def hook_length_count(p):
    """Number of standard tableaux by the hook length product."""
    conj = conjugate(p)
    count = factorial(sum(p))
    for r, length in enumerate(p):
        for c in range(length):
            count //= (length - c) + (conj[c] - r) - 1
    return count


def compositions(n, parts):
    """All length-`parts` tuples of nonnegative integers summing to n."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest
