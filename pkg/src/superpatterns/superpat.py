"""Superpattern constructions and their constructive embeddings.

Every construction is built as a chessboard (or as a sum of smaller
permutations) and read back with :func:`from_chessboard`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .majorize import majorize, xi
from .perm import (
    Chessboard,
    Permutation,
    avoids,
    contains,
    from_chessboard,
    inverse,
    labelled_from_squares,
    standardize,
)

CLASSES = {
    "213": ((2, 1, 3),),
    "213-312": ((2, 1, 3), (3, 1, 2)),
    "213-132": ((2, 1, 3), (1, 3, 2)),
    "213-3412": ((2, 1, 3), (3, 4, 1, 2)),
}


@dataclass(frozen=True)
class SuperpatternSpec:
    class_tag: str
    n: int
    s: Optional[int] = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.class_tag == "strahler":
            if self.s is None or self.s < 2:
                raise ValueError("strahler superpatterns need s >= 2")
        elif self.class_tag not in CLASSES:
            raise ValueError(f"unknown class {self.class_tag!r}")

    def build(self) -> Permutation:
        return build(self.class_tag, self.n, self.s)


def build(class_tag: str, n: int, s: Optional[int] = None) -> Permutation:
    if class_tag == "213":
        return mu(n)
    if class_tag == "213-312":
        return unimodal_superpattern(n)
    if class_tag == "213-132":
        return superpattern_213_132(n)
    if class_tag == "213-3412":
        return superpattern_213_3412(n)
    if class_tag == "strahler":
        if s is None:
            raise ValueError("strahler superpatterns need s")
        return strahler_superpattern(n, s)
    raise ValueError(f"unknown class {class_tag!r}")


# -- mu_n: superpatterns for S_n(213) ------------------------------------------

def _mu_squares(n: int) -> dict[tuple[int, int], int]:
    # mu_n puts a corner and a second row at the bottom and mu_{n-2} two rows up
    squares = {}
    k, lift = n, 0
    while k >= 2:
        squares[k, lift + 1] = 1
        squares[k - 1, lift + 2] = 2
        for i in range(1, k - 1):
            squares[i, lift + 2] = 1
        k, lift = k - 2, lift + 2
    if k == 1:
        squares[1, lift + 1] = 1
    return squares


def mu_board(n: int) -> Chessboard:
    if n < 1:
        raise ValueError("mu_board needs n >= 1")
    return Chessboard.from_dict(_mu_squares(n), n, n)


@lru_cache(maxsize=None)
def mu(n: int) -> Permutation:
    """The S_n(213)-superpattern of length n^2/4 + n + ((-1)^n - 1)/8."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    # every row and column of the layout is occupied, so the board needs no validation
    squares = {cr: [None] * v for cr, v in _mu_squares(n).items()}
    return Permutation(labelled_from_squares(squares)[0])


def mu_length(n: int) -> int:
    return (2 * n * n + 8 * n + (-1) ** n - 1) // 8


@lru_cache(maxsize=None)
def _mu_layout(n: int):
    """Positions inside mu_n: the bottom-right corner, the second row, and
    the embedded copy of mu_{n-2}."""
    pos = inverse(mu(n))
    corner = pos[0]
    row2 = [pos[v - 1] for v in range(2, n + 2)]
    lift = [pos[v + n] for v in mu(n - 2)] if n >= 2 else []
    return corner, row2, lift


def embed_into_mu(p: Sequence[int], n: Optional[int] = None) -> tuple[int, ...]:
    """Positions of mu(n) forming a copy of the 213-avoiding permutation ``p``."""
    p = tuple(p)
    if n is None:
        n = len(p)
    if len(p) != n:
        raise ValueError("pattern length must equal n")
    if not avoids(p, [(2, 1, 3)]):
        raise ValueError("pattern contains 213")
    return _embed_mu(p, n)


@lru_cache(maxsize=None)
def _embed_mu(p: tuple[int, ...], n: int) -> tuple[int, ...]:
    if n == 0:
        return ()
    if n == 1:
        return (1,)
    corner, row2, lift = _mu_layout(n)
    pos = inverse(p)
    out = [0] * n
    if p[-1] == 1:
        # Case 1: last element onto the corner, second-lowest row onto row 2.
        low = 2
        out[n - 1] = corner
    else:
        low = 1
    run = [pos[low - 1]]
    while run[-1] < n and len(run) + low <= n and pos[low + len(run) - 1] > run[-1]:
        run.append(pos[low + len(run) - 1])
    for i in run:
        out[i - 1] = row2[i - 1]

    m = n - 2
    gaps = []
    if run[0] > 1:
        a = run[0] - 1
        gaps.append((1, run[0] - 1, m, m - a + 1))
    for left, right in zip(run, run[1:]):
        if right - left > 1:
            gaps.append((left + 1, right - 1, m - left + 1, m - right + 3))
    for start, stop, top, bottom in gaps:
        block = standardize(p[start - 1:stop])
        tau = (
            tuple(range(m, top, -1))
            + tuple(b + bottom - 1 for b in block)
            + tuple(range(bottom - 1, 0, -1))
        )
        inner = _embed_mu(tau, m)
        offset = m - top
        for k in range(len(block)):
            out[start - 1 + k] = lift[inner[offset + k] - 1]
    return tuple(out)


# -- classes with near-linear superpatterns ------------------------------------

def unimodal_superpattern(n: int) -> Permutation:
    """1 3 5 ... (2n-1) (2n-2) ... 4 2: a minimal S_n(213,312)-superpattern."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Permutation(list(range(1, 2 * n, 2)) + list(range(2 * n - 2, 0, -2)))


def diagonal_board(diagonal: Sequence[int]) -> Chessboard:
    """Square board with ``diagonal`` on the top-left to bottom-right diagonal."""
    k = len(diagonal)
    return Chessboard.from_dict({(i, k + 1 - i): d for i, d in enumerate(diagonal, 1)}, k, k)


def superpattern_213_132(n: int) -> Permutation:
    if n < 1:
        raise ValueError("n must be >= 1")
    return from_chessboard(diagonal_board([xi(i) for i in range(1, n + 1)]))


_BASE_25314 = {(1, 2): 1, (1, 3): 1, (2, 2): 1, (3, 1): 1, (3, 2): 1}


def board_213_3412(n: int) -> Chessboard:
    if n < 3:
        raise ValueError("the 3n-4 construction needs n >= 3")
    size = 2 * n - 3
    squares = {(c + n - 3, r + n - 3): v for (c, r), v in _BASE_25314.items()}
    for i in list(range(1, n - 2)) + list(range(n + 1, size + 1)):
        squares[i, size + 1 - i] = 1
    for i in range(1, n - 2):
        squares[i, i] = 1
    return Chessboard.from_dict(squares, size, size)


def superpattern_213_3412(n: int) -> Permutation:
    return from_chessboard(board_213_3412(n))


# -- P(n, s): superpatterns for bounded Strahler number ------------------------

def _skew_under_one(parts: Sequence[Sequence[int]]) -> tuple[int, ...]:
    # A single minimum followed by ``parts`` laid out top-left to bottom-right.
    out = [1]
    remaining = sum(len(q) for q in parts)
    for q in parts:
        remaining -= len(q)
        out.extend(v + remaining + 1 for v in q)
    return tuple(out)


@lru_cache(maxsize=None)
def _strahler_sp(n: int, s: int) -> tuple[int, ...]:
    if n == 0:
        return ()
    if s == 2:
        if n == 1:
            return (1,)
        if n == 2:
            return (2, 3, 1)
        return tuple(superpattern_213_3412(n))
    inner: tuple[int, ...] = ()
    for j in range(1, n + 1):
        side = _strahler_sp(xi(j), s - 1)
        inner = _skew_under_one([side, inner, side])
    return inner


def strahler_superpattern(n: int, s: int) -> Permutation:
    """P(n, s), containing every tree-shaped 213-avoider of length n with
    Strahler number at most s."""
    if s < 2:
        raise ValueError("s must be >= 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Permutation(_strahler_sp(n, s))


@lru_cache(maxsize=None)
def strahler_superpattern_length(n: int, s: int) -> int:
    if s < 2:
        raise ValueError("s must be >= 2")
    if n == 0:
        return 0
    if s == 2:
        return {1: 1, 2: 3}.get(n, 3 * n - 4)
    return sum(1 + 2 * strahler_superpattern_length(xi(j), s - 1) for j in range(1, n + 1))


def _levels(n: int, s: int):
    # 0-based offsets of the single element, the left copy and the right copy
    # at each level j = n, n-1, ..., 1.
    out = {}
    offset = 0
    for j in range(n, 0, -1):
        side = strahler_superpattern_length(xi(j), s - 1)
        inner = strahler_superpattern_length(j - 1, s)
        out[j] = (offset, offset + 1, offset + 1 + side + inner)
        offset += 1 + side
    return out


def embed_into_strahler_superpattern(p_aug: Sequence[int], n: int, s: int) -> tuple[int, ...]:
    """Positions of P(n, s) forming a copy of the tree-shaped permutation ``p_aug``.

    The chessboard graph of ``p_aug`` is split along a root-to-leaf path that
    holds every node of maximal Strahler number; the off-path subtrees are
    majorized against xi and placed recursively in the copies of P(., s - 1).
    """
    from .strahler import strahler_of_tree, tree_of_permutation

    p = tuple(getattr(p_aug, "perm", p_aug))
    if s < 2:
        raise ValueError("s must be >= 2")
    if len(p) > n:
        raise ValueError("pattern is longer than n")
    if not p:
        return ()
    if s == 2 and avoids(p, CLASSES["213-3412"]):
        # P(n, 2) covers the whole class, tree-shaped or not
        return _embed_tree(p, n, 2)
    tree = tree_of_permutation(p)
    if strahler_of_tree(tree) > s:
        raise ValueError(f"Strahler number of the pattern exceeds {s}")
    return _embed_tree(p, n, s)


def _embed_tree(p: tuple[int, ...], n: int, s: int) -> tuple[int, ...]:
    from .strahler import strahler_numbers, tree_of_permutation

    if not p:
        return ()
    host = _strahler_sp(n, s)
    if s == 2:
        found = contains(host, p)
        if found is None:
            raise RuntimeError(f"no copy of {p} in P({n}, 2)")
        return found

    tree = tree_of_permutation(p)
    numbers = strahler_numbers(tree)
    sizes = tree.subtree_sizes()
    top = numbers[tree.root]
    path = [tree.root]
    while tree.children[path[-1]]:
        kids = tree.children[path[-1]]
        forced = [k for k in kids if numbers[k] == top == s]
        if forced:
            path.append(forced[0])
        else:
            path.append(min(kids, key=lambda k: (-sizes[k], k[0])))
    path.reverse()

    off = []
    for node in path:
        rest = [k for k in tree.children[node] if k not in path]
        off.append(rest[0] if rest else None)
    counts = [1 + (sizes[o] if o is not None else 0) for o in off]
    levels = _levels(n, s)
    out = {}
    for node, child, j in zip(path, off, majorize(counts)):
        x_at, left_at, right_at = levels[j]
        out[tree.label[node]] = x_at + 1
        if child is None:
            continue
        members = sorted(tree.label[v] for v in tree.descendants(child))
        block = standardize([p[i] for i in members])
        inner = _embed_tree(tuple(block), xi(j), s - 1)
        # up-child subtrees sit top-left of the path, right-child ones bottom-right
        base = left_at if child[0] == node[0] else right_at
        for i, q in zip(members, inner):
            out[i] = base + q
    return tuple(out[i] for i in range(len(p)))


def augment(sigma: Sequence[int]) -> Permutation:
    """1, |sigma|+3, sigma shifted up by 2, then 2."""
    k = len(sigma)
    return Permutation((1, k + 3) + tuple(v + 2 for v in sigma) + (2,))
