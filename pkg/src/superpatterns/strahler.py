"""Tree augmentation of 213-avoiding permutations and Strahler numbers.

A permutation is *tree-shaped* when its chessboard holds only zeros and ones
and its chessboard graph is a single tree.  In such a tree every internal
node has exactly two children, listed as ``[up, right]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Hashable, Optional, Sequence

from .perm import (
    Permutation,
    avoids,
    board_graph,
    chessboard,
    column_runs,
    contains,
    enumerate_class,
    row_runs,
    standardize,
)

Node = Hashable


@dataclass
class RootedTree:
    root: Node
    children: dict = field(default_factory=dict)
    label: dict = field(default_factory=dict)

    def nodes(self) -> list:
        out, stack = [], [self.root]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(self.children.get(v, [])))
        return out

    def __len__(self) -> int:
        return len(self.nodes())

    def descendants(self, v) -> list:
        return RootedTree(v, self.children).nodes()

    def subtree_sizes(self) -> dict:
        sizes = {}
        for v in reversed(self.nodes()):
            sizes[v] = 1 + sum(sizes[c] for c in self.children.get(v, []))
        return sizes

    def shape(self, v=None):
        """Nested tuples describing the ordered tree below ``v``."""
        v = self.root if v is None else v
        return tuple(self.shape(c) for c in self.children.get(v, []))

    @classmethod
    def from_shape(cls, shape) -> "RootedTree":
        children: dict = {}
        counter = iter(range(10 ** 9))

        def build(sh):
            v = next(counter)
            children[v] = [build(s) for s in sh]
            return v

        root = build(shape)
        return cls(root, children)


def complete_binary_tree(height: int) -> RootedTree:
    shape: tuple = ()
    for _ in range(height):
        shape = (shape, shape)
    return RootedTree.from_shape(shape)


def path_tree(k: int) -> RootedTree:
    if k < 1:
        raise ValueError("a path needs at least one node")
    shape: tuple = ()
    for _ in range(k - 1):
        shape = (shape,)
    return RootedTree.from_shape(shape)


def strahler_numbers(tree: RootedTree) -> dict:
    numbers = {}
    for v in reversed(tree.nodes()):
        kids = [numbers[c] for c in tree.children.get(v, [])]
        if not kids:
            numbers[v] = 1
        else:
            top = max(kids)
            numbers[v] = top + 1 if kids.count(top) > 1 else top
    return numbers


def strahler_of_tree(tree: RootedTree) -> int:
    return strahler_numbers(tree)[tree.root]


def tree_of_permutation(p: Sequence[int]) -> RootedTree:
    """Chessboard graph of a tree-shaped permutation as a rooted tree.

    Nodes are ``(column, row)`` squares; ``label`` maps each to its 0-based
    position in ``p``.
    """
    if not p:
        raise ValueError("empty permutation has no chessboard graph")
    board = chessboard(p)
    if any(v != 1 for _, _, v in board.nonzero()):
        raise ValueError("chessboard has a square holding more than one element")
    g = board_graph(board)
    indeg = g.in_degree()
    roots = [v for v, d in indeg.items() if d == 0]
    if len(roots) != 1 or any(d > 1 for d in indeg.values()):
        raise ValueError("chessboard graph is not a single tree")
    tree = RootedTree(roots[0], g.children())
    if len(tree) != len(indeg):
        raise ValueError("chessboard graph is not a single tree")
    cols, rows = column_runs(p), row_runs(p)
    tree.label = {(cols[i], rows[v - 1]): i for i, v in enumerate(p)}
    return tree


def is_tree_shaped(p: Sequence[int]) -> bool:
    try:
        tree_of_permutation(p)
    except ValueError:
        return False
    return True


def tree_pattern_permutation(t: RootedTree) -> Permutation:
    """Permutation whose chessboard graph is the ordered full binary tree ``t``.

    Children are read as ``[up, right]``; a node with exactly one child cannot
    occur in a 213-avoiding chessboard graph and is rejected.
    """

    def realize(v) -> tuple[int, ...]:
        kids = t.children.get(v, [])
        if not kids:
            return (1,)
        if len(kids) != 2:
            raise ValueError(f"node {v!r} has {len(kids)} children; need 0 or 2")
        up, right = realize(kids[0]), realize(kids[1])
        return (1,) + tuple(u + len(right) + 1 for u in up) + tuple(r + 1 for r in right)

    return Permutation(realize(t.root))


@dataclass(frozen=True)
class AugmentedPermutation:
    perm: Permutation
    real_mask: tuple[bool, ...]
    provenance: tuple[int, ...]

    def real_part(self) -> Permutation:
        return standardize([v for v, real in zip(self.perm, self.real_mask) if real])

    def tree(self) -> RootedTree:
        return tree_of_permutation(self.perm)

    def real_nodes(self) -> set:
        """Chessboard squares holding real elements."""
        return {node for node, pos in self.tree().label.items() if self.real_mask[pos]}


def _skew_blocks(vals: Sequence[int]) -> list[int]:
    # Cut points splitting ``vals`` into skew-indecomposable blocks.
    suffix_max = [0] * (len(vals) + 1)
    for i in range(len(vals) - 1, -1, -1):
        suffix_max[i] = max(vals[i], suffix_max[i + 1])
    cuts, low = [], None
    for k in range(1, len(vals)):
        low = vals[k - 1] if low is None else min(low, vals[k - 1])
        if low > suffix_max[k]:
            cuts.append(k)
    return cuts


def _join(label, up, right):
    # Tree node: a single minimum with ``up`` above-left of ``right``.
    (up_p, up_l), (right_p, right_l) = up, right
    shift = len(right_p) + 1
    perm = (1,) + tuple(v + shift for v in up_p) + tuple(v + 1 for v in right_p)
    return perm, [label] + up_l + right_l


def _rank(s_up: int, s_right: int) -> int:
    return s_up + 1 if s_up == s_right else max(s_up, s_right)


@lru_cache(maxsize=None)
def _augment(vals: tuple[int, ...]):
    """(strahler, perm, labels) for the best split found; labels are 0-based
    positions of ``vals`` or None for added elements."""
    if len(vals) == 1:
        return 1, (1,), (0,)

    def sub(lo, hi):
        s, perm, labels = _augment(standardize(vals[lo:hi]))
        return s, perm, [None if lab is None else lab + lo for lab in labels]

    cuts = _skew_blocks(vals)
    if cuts:
        root, first = None, 0
    else:
        # skew-indecomposable and 213-avoiding: the first entry is the minimum
        root, first = 0, 1
        cuts = [first + k for k in _skew_blocks(vals[first:])]
    options = []
    for k in cuts:
        (s1, p1, l1), (s2, p2, l2) = sub(first, k), sub(k, len(vals))
        options.append((_rank(s1, s2), (p1, l1), (p2, l2)))
    if not options:
        s1, p1, l1 = sub(first, len(vals))
        options.append((_rank(s1, 1), (p1, l1), ((1,), [None])))
    s, up, right = min(options, key=lambda o: (o[0], len(o[1][0]) + len(o[2][0])))
    perm, labels = _join(root, up, right)
    return s, perm, tuple(labels)


def tree_augment(p: Sequence[int], minimize: bool = True) -> AugmentedPermutation:
    """A tree-shaped 213-avoiding permutation of length <= 2|p| - 1 containing ``p``.

    A 213-avoider is either a skew sum of smaller ones, which get linked
    under one new root, or its minimum comes first and the rest is handled
    the same way with that minimum as the root.  A square that would hold two
    elements is split by a new leaf.  Each merge adds at most one element,
    so at most |p| - 1 are added in total.  With ``minimize`` added elements
    are then dropped greedily while the result stays tree-shaped and its
    Strahler number does not grow.
    """
    p = tuple(p)
    if not p:
        raise ValueError("cannot augment the empty permutation")
    if not avoids(p, [(2, 1, 3)]):
        raise ValueError("tree augmentation needs a 213-avoiding permutation")
    _, perm, labels = _augment(standardize(p))
    prov = [0] * len(p)
    for pos, lab in enumerate(labels):
        if lab is not None:
            prov[lab] = pos
    aug = AugmentedPermutation(
        Permutation(perm), tuple(lab is not None for lab in labels), tuple(prov)
    )
    if minimize:
        aug = _prune_fictitious(aug)
    return aug


def _drop(aug: AugmentedPermutation, pos: int) -> AugmentedPermutation:
    values = list(aug.perm[:pos]) + list(aug.perm[pos + 1:])
    mask = aug.real_mask[:pos] + aug.real_mask[pos + 1:]
    prov = tuple(q - (q > pos) for q in aug.provenance)
    return AugmentedPermutation(standardize(values), mask, prov)


def _prune_fictitious(aug: AugmentedPermutation) -> AugmentedPermutation:
    best = strahler_of_tree(aug.tree())
    changed = True
    while changed:
        changed = False
        for pos, real in enumerate(aug.real_mask):
            if real:
                continue
            cand = _drop(aug, pos)
            try:
                s = strahler_of_tree(cand.tree())
            except ValueError:
                continue
            if s <= best:
                aug, best, changed = cand, s, True
                break
    return aug


def strahler_upper_bound(p: Sequence[int]) -> int:
    """Strahler number of our tree augmentation of ``p``; never below the true value."""
    return strahler_of_tree(tree_augment(p).tree())


def strahler_exact(p: Sequence[int]) -> int:
    """Minimum Strahler number over tree augmentations of length <= 2|p| - 1.

    Exhaustive over the 213-avoiders of each length, so only practical for
    short inputs.
    """
    p = tuple(p)
    if len(p) > 7:
        raise ValueError("exhaustive Strahler search is limited to |p| <= 7")
    if not avoids(p, [(2, 1, 3)]):
        raise ValueError("Strahler number is defined for 213-avoiding permutations")
    best: Optional[int] = None
    for m in range(len(p), 2 * len(p)):
        for sigma in enumerate_class(m, [(2, 1, 3)]):
            if best is not None and best <= 2:
                return best
            if not is_tree_shaped(sigma) or contains(sigma, p) is None:
                continue
            s = strahler_of_tree(tree_of_permutation(sigma))
            best = s if best is None else min(best, s)
    assert best is not None
    return best


def fictitious_leaf_violations(aug: AugmentedPermutation) -> int:
    """Fictitious leaves whose parent is also fictitious."""
    tree = aug.tree()
    real = {node: aug.real_mask[pos] for node, pos in tree.label.items()}
    count = 0
    for v in tree.nodes():
        for c in tree.children.get(v, []):
            if not tree.children.get(c) and not real[c] and not real[v]:
                count += 1
    return count


def complete_binary_minor(tree: RootedTree, real: Optional[set] = None) -> RootedTree:
    """Largest complete binary tree that is a rooted minor of ``tree`` in
    which every branch set contains a node of ``real`` (default: all nodes).

    The result is keyed by one real representative per branch set, and
    ``label[rep]`` holds the whole branch set.  With all nodes real the
    height equals the Strahler number minus one.
    """
    real = set(tree.nodes()) if real is None else set(real)
    kids = tree.children
    order = tree.nodes()
    has: dict = {}
    A: dict = {}  # best minor anywhere in subtree(v)
    N: dict = {}  # best minor whose root set contains v (real not required)
    R: dict = {}  # best minor whose root set contains v and a real node
    E: dict = {}  # best minor disjoint from some real-carrying set grown from v
    for v in reversed(order):
        cs = kids.get(v, [])
        has[v] = v in real or any(has[c] for c in cs)
        pairs = [(a, b) for a in cs for b in cs if a != b]
        n = max([0] + [N[c] for c in cs] + [1 + min(A[a], A[b]) for a, b in pairs if min(A[a], A[b]) >= 0])
        N[v] = n
        if not has[v]:
            R[v] = E[v] = A[v] = -1
            continue
        r = [0] + [R[c] for c in cs]
        if v in real:
            r.append(n)
        r += [1 + min(E[a], A[b]) for a, b in pairs if min(E[a], A[b]) >= 0]
        r += [N[a] for a, b in pairs if has[b]]
        R[v] = max(r)
        e = [E[c] for c in cs] + [A[b] for a, b in pairs if has[a]]
        if v in real:
            e += [A[c] for c in cs]
        E[v] = max([-1] + e)
        A[v] = max([R[v]] + [A[c] for c in cs])

    def to_real(v):
        path = [v]
        while path[-1] not in real:
            path.append(next(c for c in kids.get(path[-1], []) if has[c]))
        return path

    # a minor node is (branch set, [child minors])
    def build_A(v, h):
        if R[v] >= h:
            return build_R(v, h)
        return build_A(next(c for c in kids.get(v, []) if A[c] >= h), h)

    def build_N(v, h):
        cs = kids.get(v, [])
        if h == 0:
            return {v}, []
        for a in cs:
            for b in cs:
                if a < b and min(A[a], A[b]) >= h - 1:
                    return {v}, [build_A(a, h - 1), build_A(b, h - 1)]
        S, sub = build_N(next(c for c in cs if N[c] >= h), h)
        return S | {v}, sub

    def build_R(v, h):
        cs = kids.get(v, [])
        if h == 0:
            return set(to_real(v)), []
        if v in real and N[v] >= h:
            return build_N(v, h)
        for c in cs:
            if R[c] >= h:
                S, sub = build_R(c, h)
                return S | {v}, sub
        for a in cs:
            for b in cs:
                if a != b and min(E[a], A[b]) >= h - 1:
                    P, m1 = build_E(a, h - 1)
                    return P | {v}, [m1, build_A(b, h - 1)]
        for a in cs:
            for b in cs:
                if a != b and has[b] and N[a] >= h:
                    S, sub = build_N(a, h)
                    return S | {v} | set(to_real(b)), sub
        raise AssertionError("inconsistent minor table")

    def build_E(v, h):
        cs = kids.get(v, [])
        if v in real:
            for c in cs:
                if A[c] >= h:
                    return {v}, build_A(c, h)
        for a in cs:
            for b in cs:
                if a != b and has[a] and A[b] >= h:
                    return {v} | set(to_real(a)), build_A(b, h)
        P, m = build_E(next(c for c in cs if E[c] >= h), h)
        return P | {v}, m

    if A[tree.root] < 0:
        raise ValueError("tree has no real node")
    children: dict = {}
    label: dict = {}
    pos = {v: i for i, v in enumerate(order)}

    def emit(m):
        S, sub = m
        rep = min((u for u in S if u in real), key=pos.__getitem__)
        label[rep] = frozenset(S)
        children[rep] = [emit(c) for c in sub]
        return rep

    root = emit(build_A(tree.root, A[tree.root]))
    return RootedTree(root, children, label)


def is_rooted_minor(small: RootedTree, big: RootedTree) -> bool:
    """Whether ``small`` arises from ``big`` by contracting edges and deleting
    subtrees.  For rooted trees this is the existence of an injective map
    preserving the ancestor relation in both directions."""
    desc = {v: set(big.descendants(v)) - {v} for v in big.nodes()}
    kids = small.children

    def place(x, inside: list) -> list:
        # candidate images of x among nodes in ``inside``
        out = []
        for t in inside:
            if embed_children(x, t):
                out.append(t)
        return out

    def embed_children(x, t) -> bool:
        cs = kids.get(x, [])
        if not cs:
            return True
        options = [place(c, sorted(desc[t], key=str)) for c in cs]
        if any(not o for o in options):
            return False

        def assign(i, used: list) -> bool:
            if i == len(cs):
                return True
            for t2 in options[i]:
                if all(t2 not in desc[u] and u not in desc[t2] and u != t2 for u in used):
                    if assign(i + 1, used + [t2]):
                        return True
            return False

        return assign(0, [])

    return bool(place(small.root, big.nodes()))
