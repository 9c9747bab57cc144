"""Permutations, pattern containment and the chessboard representation.

Permutations are 1-based: a permutation of length n is a sequence holding each
of 1..n exactly once.  Rows and columns of a chessboard are also 1-based;
``board[c, r]`` is the cell in column ``c`` (left to right) and row ``r``
(bottom to top).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence


class Permutation(tuple):
    """Immutable 1-based permutation.

    >>> Permutation([2, 3, 1]).inverse()
    Permutation(3 1 2)
    """

    def __new__(cls, values: Iterable[int] = ()):
        self = super().__new__(cls, (int(v) for v in values))
        if sorted(self) != list(range(1, len(self) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self)}: {tuple(self)}")
        return self

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse the space separated text format, e.g. ``"2 5 3 1 4"``."""
        tokens = text.split()
        for t in tokens:
            if not t.isdigit():
                raise ValueError(f"invalid permutation entry {t!r}")
        return cls(int(t) for t in tokens)

    def __str__(self) -> str:
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def inverse(self) -> "Permutation":
        return inverse(self)


def as_perm(p: Sequence[int]) -> Permutation:
    return p if isinstance(p, Permutation) else Permutation(p)


def standardize(values: Sequence[int]) -> Permutation:
    """Return the permutation order-isomorphic to a sequence of distinct values."""
    order = sorted(range(len(values)), key=values.__getitem__)
    out = [0] * len(values)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return Permutation(out)


def inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for i, v in enumerate(p, 1):
        inv[v - 1] = i
    return Permutation(inv)


@lru_cache(maxsize=4096)
def _plan(needle: tuple[int, ...]):
    """Per-index nearest smaller / larger earlier entries, plus the earlier
    indices that any later entry still compares against."""
    k = len(needle)
    lo, hi = [], []
    for i, v in enumerate(needle):
        below = [j for j in range(i) if needle[j] < v]
        above = [j for j in range(i) if needle[j] > v]
        lo.append(max(below, key=needle.__getitem__) if below else -1)
        hi.append(min(above, key=needle.__getitem__) if above else -1)
    active = [
        tuple(sorted({b for t in range(i, k) for b in (lo[t], hi[t]) if 0 <= b < i}))
        for i in range(k + 1)
    ]
    return tuple(lo), tuple(hi), tuple(active)


def contains(haystack: Sequence[int], needle: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Find ``needle`` as a pattern of ``haystack``.

    Returns the lexicographically smallest strictly increasing tuple of
    1-based positions whose values are order-isomorphic to ``needle``, or
    ``None`` if there is no such occurrence.
    """
    k, n = len(needle), len(haystack)
    if k == 0:
        return ()
    if k > n:
        return None
    lo, hi, active = _plan(tuple(needle))
    h = haystack
    chosen = [0] * k
    # a dead end depends only on the start and the earlier picks that later
    # entries still compare against, so failures are remembered by that key
    failed: set = set()

    def search(i: int, start: int) -> bool:
        if i == k:
            return True
        key = (i, start, *(h[chosen[j]] for j in active[i]))
        if key in failed:
            return False
        lo_i, hi_i = lo[i], hi[i]
        vmin = h[chosen[lo_i]] if lo_i >= 0 else 0
        vmax = h[chosen[hi_i]] if hi_i >= 0 else n + 1
        for pos in range(start, n - (k - i) + 1):
            v = h[pos]
            if vmin < v < vmax:
                chosen[i] = pos
                if search(i + 1, pos + 1):
                    return True
        failed.add(key)
        return False

    if search(0, 0):
        return tuple(c + 1 for c in chosen)
    return None


def avoids(p: Sequence[int], forbidden: Iterable[Sequence[int]]) -> bool:
    return all(contains(p, f) is None for f in forbidden)


def enumerate_class(n: int, forbidden: Iterable[Sequence[int]] = ()) -> Iterator[Permutation]:
    """Yield every member of S_n(forbidden) exactly once, in lexicographic order.

    Classes are closed under taking patterns, so members of length ``m`` are
    grown from members of length ``m - 1`` by inserting the new maximum.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    forbidden = [tuple(f) for f in forbidden]
    level = [()] if avoids((), forbidden) else []
    for m in range(1, n + 1):
        nxt = []
        for p in level:
            for slot in range(m):
                q = p[:slot] + (m,) + p[slot:]
                if avoids(q, forbidden):
                    nxt.append(q)
        level = nxt
    for p in sorted(level):
        yield Permutation(p)


def column_runs(p: Sequence[int]) -> list[int]:
    """Column index (1-based) of every position: maximal ascending runs."""
    cols, c = [], 0
    for i, v in enumerate(p):
        if i == 0 or v < p[i - 1]:
            c += 1
        cols.append(c)
    return cols


def row_runs(p: Sequence[int]) -> list[int]:
    """Row index (1-based) of every value 1..n: maximal ascending runs of the inverse."""
    return column_runs(inverse(p))


@dataclass(frozen=True)
class Chessboard:
    """Nonnegative integer matrix; ``cells[c - 1][r - 1]`` is square (c, r)."""

    cells: tuple[tuple[int, ...], ...]

    @property
    def ncols(self) -> int:
        return len(self.cells)

    @property
    def nrows(self) -> int:
        return len(self.cells[0]) if self.cells else 0

    def __getitem__(self, key: tuple[int, int]) -> int:
        c, r = key
        if not (1 <= c <= self.ncols and 1 <= r <= self.nrows):
            raise IndexError(key)
        return self.cells[c - 1][r - 1]

    def nonzero(self) -> list[tuple[int, int, int]]:
        """(column, row, value) for every nonzero square, column-major."""
        return [
            (c, r, v)
            for c, col in enumerate(self.cells, 1)
            for r, v in enumerate(col, 1)
            if v
        ]

    def total(self) -> int:
        return sum(map(sum, self.cells))

    @classmethod
    def from_dict(cls, squares: dict[tuple[int, int], int], ncols: int, nrows: int) -> "Chessboard":
        cells = [[0] * nrows for _ in range(ncols)]
        for (c, r), v in squares.items():
            cells[c - 1][r - 1] = v
        return cls(tuple(map(tuple, cells)))

    @classmethod
    def from_rows(cls, rows_top_first: Sequence[Sequence[int]]) -> "Chessboard":
        if not rows_top_first:
            return cls(())
        width = len(rows_top_first[0])
        for i, r in enumerate(rows_top_first, 1):
            if len(r) != width:
                raise ValueError(f"row {i}: expected {width} entries, found {len(r)}")
        nrows, ncols = len(rows_top_first), width
        cells = tuple(
            tuple(int(rows_top_first[nrows - r][c - 1]) for r in range(1, nrows + 1))
            for c in range(1, ncols + 1)
        )
        return cls(cells)

    def rows_top_first(self) -> list[list[int]]:
        return [[self[c, r] for c in range(1, self.ncols + 1)] for r in range(self.nrows, 0, -1)]

    def to_text(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.rows_top_first())

    @classmethod
    def parse(cls, text: str) -> "Chessboard":
        rows = []
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            try:
                rows.append([int(t) for t in line.split()])
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer chessboard entry") from None
            if len(rows[-1]) != len(rows[0]):
                raise ValueError(f"line {lineno}: expected {len(rows[0])} entries, found {len(rows[-1])}")
        return cls.from_rows(rows)

    def validate(self) -> None:
        if not self.cells:
            raise ValueError("empty chessboard")
        for c, col in enumerate(self.cells, 1):
            if any(v < 0 for v in col):
                raise ValueError(f"negative entry in column {c}")
            if not any(col):
                raise ValueError(f"column {c} is all zero")
        for r in range(1, self.nrows + 1):
            if not any(self[c, r] for c in range(1, self.ncols + 1)):
                raise ValueError(f"row {r} is all zero")


def chessboard(p: Sequence[int]) -> Chessboard:
    if not p:
        raise ValueError("chessboard of the empty permutation is undefined")
    cols = column_runs(p)
    rows = row_runs(p)
    squares: dict[tuple[int, int], int] = {}
    for i, v in enumerate(p):
        key = (cols[i], rows[v - 1])
        squares[key] = squares.get(key, 0) + 1
    return Chessboard.from_dict(squares, cols[-1], max(rows))


def labelled_from_squares(squares: dict[tuple[int, int], list]) -> tuple[list[int], list]:
    """Recover a labelled permutation from squares holding lists of labels.

    Values are allocated row by row from the bottom, left to right within a
    row; the permutation is then read column by column, bottom to top.
    Returns ``(values, labels)`` in position order.
    """
    value_of = {}
    nxt = 1
    for (c, r) in sorted(squares, key=lambda cr: (cr[1], cr[0])):
        vals = list(range(nxt, nxt + len(squares[c, r])))
        nxt += len(vals)
        value_of[c, r] = vals
    values, labels = [], []
    for (c, r) in sorted(squares):
        values.extend(value_of[c, r])
        labels.extend(squares[c, r])
    return values, labels


def from_chessboard(board: Chessboard) -> Permutation:
    board.validate()
    squares = {(c, r): [None] * v for c, r, v in board.nonzero()}
    values, _ = labelled_from_squares(squares)
    return Permutation(values)


@dataclass(frozen=True)
class ChessboardGraph:
    nodes: tuple[tuple[int, int, int], ...]
    edges: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    def in_degree(self) -> dict[tuple[int, int], int]:
        deg = {(c, r): 0 for c, r, _ in self.nodes}
        for _, b in self.edges:
            deg[b] += 1
        return deg

    def children(self) -> dict[tuple[int, int], list[tuple[int, int]]]:
        out = {(c, r): [] for c, r, _ in self.nodes}
        for a, b in self.edges:
            out[a].append(b)
        return out


def board_graph(board: Chessboard) -> ChessboardGraph:
    nodes = tuple(board.nonzero())
    edges = []
    by_col: dict[int, list[int]] = {}
    by_row: dict[int, list[int]] = {}
    for c, r, _ in nodes:
        by_col.setdefault(c, []).append(r)
        by_row.setdefault(r, []).append(c)
    # upward edges first so each node's children read (up, right)
    for c, rs in sorted(by_col.items()):
        rs.sort()
        edges.extend(((c, a), (c, b)) for a, b in zip(rs, rs[1:]))
    for r, cs in sorted(by_row.items()):
        cs.sort()
        edges.extend(((a, r), (b, r)) for a, b in zip(cs, cs[1:]))
    return ChessboardGraph(nodes, tuple(edges))


def chessboard_graph(p: Sequence[int]) -> ChessboardGraph:
    return board_graph(chessboard(p))


def is_directed_plane_forest(g: ChessboardGraph) -> bool:
    if any(d > 1 for d in g.in_degree().values()):
        return False
    vertical = [(a[0], a[1], b[1]) for a, b in g.edges if a[0] == b[0]]
    horizontal = [(a[1], a[0], b[0]) for a, b in g.edges if a[1] == b[1]]
    # Edges join consecutive nonzero squares, so an endpoint can never sit
    # inside another edge; only proper crossings remain to rule out.
    for c, r0, r1 in vertical:
        for r, c0, c1 in horizontal:
            if c0 < c < c1 and r0 < r < r1:
                return False
    return True
