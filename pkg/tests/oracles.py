"""Slow, obviously-correct reference implementations used as test oracles."""

from __future__ import annotations

from itertools import combinations, permutations


def order_type(seq):
    ranked = sorted(seq)
    return tuple(ranked.index(v) + 1 for v in seq)


def brute_contains(hay, needle):
    """Lexicographically first witness by trying every subsequence."""
    needle = tuple(needle)
    for pos in combinations(range(len(hay)), len(needle)):
        if order_type([hay[i] for i in pos]) == needle:
            return tuple(i + 1 for i in pos)
    return None


def brute_class(n, forbidden):
    return [
        p
        for p in permutations(range(1, n + 1))
        if all(brute_contains(p, f) is None for f in forbidden)
    ]


def runs(seq):
    """1-based index of the maximal ascending run holding each position."""
    out, run = [], 1
    for i, v in enumerate(seq):
        if i and v < seq[i - 1]:
            run += 1
        out.append(run)
    return out


def board_by_definition(p):
    """{(col, row): count} with columns = runs of p, rows = runs of p^-1."""
    inv = [0] * len(p)
    for i, v in enumerate(p, 1):
        inv[v - 1] = i
    col_of_pos = runs(p)
    row_of_val = runs(inv)
    cells = {}
    for i, v in enumerate(p):
        key = (col_of_pos[i], row_of_val[v - 1])
        cells[key] = cells.get(key, 0) + 1
    return cells


def catalan(n):
    from math import comb

    return comb(2 * n, n) // (n + 1)


def witness_ok(hay, needle, positions):
    if positions is None or len(positions) != len(needle):
        return False
    if list(positions) != sorted(set(positions)) or positions[0] < 1 or positions[-1] > len(hay):
        return False
    return order_type([hay[i - 1] for i in positions]) == tuple(needle)
