"""Exhaustive searches for short superpatterns.

Candidates of length L are generated by inverse Robinson-Schensted from
pairs of standard Young tableaux of equal shape.  A superpattern for a class
that contains the increasing (decreasing) permutation of length n must have a
longest increasing (decreasing) subsequence of length at least n, which by
Schensted's theorem bounds the first row (column) of the shape, so all other
shapes are skipped without generating a single permutation.

Superpatterns are monotone in length: inserting any element into a
superpattern gives another one.  Hence "no superpattern of length L - 1"
settles minimality of a length-L witness.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .perm import Permutation, avoids, contains, enumerate_class, inverse

Forbidden = tuple[tuple[int, ...], ...]


def _norm(forbidden: Iterable[Sequence[int]]) -> Forbidden:
    return tuple(sorted({tuple(f) for f in forbidden}))


def is_superpattern(sigma: Sequence[int], forbidden: Iterable[Sequence[int]], n: int) -> bool:
    sigma = tuple(sigma)
    return all(contains(sigma, p) is not None for p in enumerate_class(n, forbidden))


def missing_patterns(sigma: Sequence[int], forbidden: Iterable[Sequence[int]], n: int) -> list[Permutation]:
    sigma = tuple(sigma)
    return [p for p in enumerate_class(n, forbidden) if contains(sigma, p) is None]


# -- symmetries ----------------------------------------------------------------

def _reverse(p):
    return tuple(reversed(p))


def _complement(p):
    k = len(p) + 1
    return tuple(k - v for v in p)


def _inverse(p):
    return tuple(inverse(p)) if p else ()


SYMMETRIES: dict[str, Callable] = {
    "inverse": _inverse,
    "reverse": _reverse,
    "complement": _complement,
    "reverse-complement": lambda p: _complement(_reverse(p)),
    "reverse-complement-inverse": lambda p: _inverse(_complement(_reverse(p))),
    "reverse-inverse": lambda p: _inverse(_reverse(p)),
    "complement-inverse": lambda p: _inverse(_complement(p)),
}


def class_symmetries(forbidden: Forbidden) -> list[str]:
    """Names of the square symmetries mapping the forbidden set onto itself.

    Such a map sends the class onto itself, and so superpatterns onto
    superpatterns of the same length.
    """
    fs = set(forbidden)
    return [name for name, f in SYMMETRIES.items() if {f(p) for p in fs} == fs]


# -- Young tableaux and inverse RSK --------------------------------------------

def partitions(total: int, max_part: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    max_part = total if max_part is None else max_part
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def standard_tableaux(shape: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All standard Young tableaux of ``shape`` as tuples of rows."""
    total = sum(shape)
    if total == 0:
        return ((),)
    out = []
    for r, length in enumerate(shape):
        # the largest entry sits in a corner
        if r + 1 < len(shape) and shape[r + 1] == length:
            continue
        smaller = list(shape)
        smaller[r] -= 1
        if smaller[r] == 0:
            smaller.pop()
        for t in standard_tableaux(tuple(smaller)):
            rows = [list(row) for row in t]
            if r == len(rows):
                rows.append([])
            rows[r].append(total)
            out.append(tuple(tuple(row) for row in rows))
    return tuple(out)


def inverse_rsk(p_tab, q_tab) -> tuple[int, ...]:
    rows = [list(r) for r in p_tab]
    where = {}
    for r, row in enumerate(q_tab):
        for c, v in enumerate(row):
            where[v] = r
    total = sum(map(len, rows))
    out = [0] * total
    for k in range(total, 0, -1):
        r = where[k]
        x = rows[r].pop()
        for rr in range(r - 1, -1, -1):
            row = rows[rr]
            # largest entry smaller than x
            lo, hi = 0, len(row)
            while lo < hi:
                mid = (lo + hi) // 2
                if row[mid] < x:
                    lo = mid + 1
                else:
                    hi = mid
            row[lo - 1], x = x, row[lo - 1]
        out[k - 1] = x
    return tuple(out)


def rsk_shape(p: Sequence[int]) -> tuple[int, ...]:
    rows: list[list[int]] = []
    for x in p:
        for row in rows:
            lo, hi = 0, len(row)
            while lo < hi:
                mid = (lo + hi) // 2
                if row[mid] < x:
                    lo = mid + 1
                else:
                    hi = mid
            if lo == len(row):
                row.append(x)
                break
            row[lo], x = x, row[lo]
        else:
            rows.append([x])
    return tuple(map(len, rows))


def candidate_shapes(length: int, min_rows_len: int, min_cols: int) -> list[tuple[int, ...]]:
    return [lam for lam in partitions(length) if lam and lam[0] >= min_rows_len and len(lam) >= min_cols]


def _shape_bounds(forbidden: Forbidden, n: int) -> tuple[int, int]:
    inc = tuple(range(1, n + 1))
    dec = tuple(range(n, 0, -1))
    return (n if avoids(inc, forbidden) else 1), (n if avoids(dec, forbidden) else 1)


# -- search --------------------------------------------------------------------

@dataclass
class Budget:
    seconds: Optional[float] = None
    nodes: Optional[int] = None


@dataclass
class SearchResult:
    answer: Optional[int]
    status: str  # "determined" or "indeterminate"
    nodes: int = 0
    seconds: float = 0.0
    witness: Optional[Permutation] = None
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"nodes": self.nodes, "seconds": round(self.seconds, 3)}
        if self.status == "determined":
            out["answer"] = self.answer
        else:
            out["indeterminate"] = True
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


class BudgetExceeded(Exception):
    pass


class _Checker:
    """Superpattern test with move-to-front ordering of the members that
    most recently rejected a candidate."""

    def __init__(self, members: Sequence[tuple[int, ...]]):
        self.members = list(members)

    def __call__(self, sigma: tuple[int, ...]) -> bool:
        for k, p in enumerate(self.members):
            if contains(sigma, p) is None:
                if k:
                    self.members.insert(0, self.members.pop(k))
                return False
        return True


def _canonical(sigma: tuple[int, ...], maps: Sequence[Callable]) -> bool:
    return all(sigma <= f(sigma) for f in maps)


def _scan_shape(args) -> tuple[Optional[tuple[int, ...]], int, bool]:
    """Scan every candidate of one shape; returns (witness, nodes, exhausted)."""
    shape, forbidden, n, sym_names, deadline, node_cap, collect = args
    checker = _Checker([tuple(p) for p in enumerate_class(n, forbidden)])
    # Inverting a permutation swaps its two tableaux, so when inversion is
    # the only symmetry the pairs with i <= j already pick one permutation
    # per orbit.  Larger groups use the lexicographic minimum of the orbit
    # instead; mixing both rules could discard a whole orbit.
    use_inverse = tuple(sym_names) == ("inverse",)
    maps = [] if use_inverse else [SYMMETRIES[s] for s in sym_names]
    tabs = standard_tableaux(shape)
    nodes = 0
    found = [] if collect else None
    for i, pt in enumerate(tabs):
        for j in range(i if use_inverse else 0, len(tabs)):
            nodes += 1
            if node_cap is not None and nodes > node_cap:
                return (found if collect else None), nodes, False
            if deadline is not None and nodes % 512 == 0 and time.monotonic() > deadline:
                return (found if collect else None), nodes, False
            sigma = inverse_rsk(pt, tabs[j])
            if maps and not _canonical(sigma, maps):
                continue
            if checker(sigma):
                if not collect:
                    return sigma, nodes, True
                found.append(sigma)
    return (found if collect else None), nodes, True


def _workers(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("SUPERPAT_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError("SUPERPAT_THREADS must be an integer") from None
    return 1


def find_superpattern(
    forbidden: Iterable[Sequence[int]],
    n: int,
    length: int,
    budget: Optional[Budget] = None,
    workers: Optional[int] = None,
    collect: bool = False,
):
    """Exhaustively look for a length-``length`` superpattern of S_n(forbidden).

    Returns ``(witness, nodes, exhausted)``; with ``collect`` the witness is
    the list of all superpatterns up to the class symmetries that were used.
    ``exhausted`` is False when the budget ran out first.
    """
    forbidden = _norm(forbidden)
    budget = budget or Budget()
    deadline = time.monotonic() + budget.seconds if budget.seconds is not None else None
    a, b = _shape_bounds(forbidden, n)
    syms = [] if collect else class_symmetries(forbidden)
    shapes = candidate_shapes(length, a, b)
    # spread the node cap evenly; unspent allowance is not redistributed
    cap = None if budget.nodes is None else max(1, budget.nodes // max(1, len(shapes)))
    jobs = [(s, forbidden, n, tuple(syms), deadline, cap, collect) for s in shapes]
    nodes, exhausted, found = 0, True, []
    k = _workers(workers)
    if k > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=k) as pool:
            results = list(pool.map(_scan_shape, jobs))
    else:
        results = []
        for job in jobs:
            res = _scan_shape(job)
            results.append(res)
            if res[0] and not collect:
                break
    for witness, used, done in results:
        nodes += used
        exhausted &= done
        if collect:
            found.extend(witness or [])
        elif witness is not None:
            return Permutation(witness), nodes, True
    if collect:
        return [Permutation(w) for w in found], nodes, exhausted
    return None, nodes, exhausted


def known_superpattern(forbidden: Iterable[Sequence[int]], n: int) -> Optional[Permutation]:
    """A construction known to be a superpattern for S_n(forbidden), if any applies."""
    from .superpat import CLASSES, build

    fs = set(_norm(forbidden))
    best = None
    for tag, base in CLASSES.items():
        if not set(base) <= fs:
            continue
        if tag == "213-3412" and n < 3:
            continue
        if n < 1:
            continue
        cand = build(tag, n)
        if best is None or len(cand) < len(best):
            best = cand
    return best


def minimal_superpattern_length(
    forbidden: Iterable[Sequence[int]],
    n: int,
    budget: Optional[Budget] = None,
    workers: Optional[int] = None,
) -> SearchResult:
    """Length of the shortest S_n(forbidden)-superpattern.

    With a known construction of length U as upper bound, only lengths
    U - 1, U - 2, ... are searched until one has no superpattern.  Without
    one, lengths grow from n until a superpattern turns up.
    """
    forbidden = _norm(forbidden)
    start = time.monotonic()
    budget = budget or Budget()
    members = list(enumerate_class(n, forbidden))
    if not members or n == 0:
        return SearchResult(0, "determined", 0, 0.0, Permutation())
    nodes = 0

    def remaining() -> Budget:
        secs = None if budget.seconds is None else budget.seconds - (time.monotonic() - start)
        if secs is not None and secs <= 0:
            raise BudgetExceeded
        left = None if budget.nodes is None else budget.nodes - nodes
        if left is not None and left <= 0:
            raise BudgetExceeded
        return Budget(secs, left)

    def done(answer, witness, status="determined"):
        return SearchResult(answer, status, nodes, time.monotonic() - start, witness)

    hint = known_superpattern(forbidden, n)
    try:
        if hint is not None and is_superpattern(hint, forbidden, n):
            best, witness = len(hint), hint
            while best - 1 >= n:
                w, used, exhausted = find_superpattern(forbidden, n, best - 1, remaining(), workers)
                nodes += used
                if w is not None:
                    best, witness = best - 1, w
                    continue
                if not exhausted:
                    return done(None, witness, "indeterminate")
                break
            return done(best, witness)
        length = n
        while True:
            w, used, exhausted = find_superpattern(forbidden, n, length, remaining(), workers)
            nodes += used
            if w is not None:
                return done(length, w)
            if not exhausted:
                return done(None, None, "indeterminate")
            length += 1
    except BudgetExceeded:
        return done(None, None, "indeterminate")


def confirm_staged(
    forbidden: Iterable[Sequence[int]],
    n: int,
    length: int,
    budget: Optional[Budget] = None,
    workers: Optional[int] = None,
) -> SearchResult:
    """Two-stage certificate that S_n(forbidden) has no superpattern of ``length``.

    Requires the class to contain ``n`` followed by any member of length
    n - 1 (true for 213-avoiders), so dropping the first element of a
    superpattern leaves an S_{n-1}-superpattern.  Stage one lists every
    length - 1 superpattern for n - 1; stage two tries every first element.
    ``answer`` is 1 when no extension works, 0 when one does.
    """
    forbidden = _norm(forbidden)
    start = time.monotonic()
    members = list(enumerate_class(n, forbidden))
    for p in enumerate_class(n - 1, forbidden):
        if not avoids((n,) + tuple(p), forbidden):
            raise ValueError("staged argument needs n + (S_{n-1} member) to stay in the class")
    found, nodes, exhausted = find_superpattern(forbidden, n - 1, length - 1, budget, workers, collect=True)
    if not exhausted:
        return SearchResult(None, "indeterminate", nodes, time.monotonic() - start)
    checker = _Checker([tuple(p) for p in members])
    for base in found:
        for first in range(1, length + 1):
            nodes += 1
            sigma = (first,) + tuple(v + (v >= first) for v in base)
            if checker(sigma):
                return SearchResult(0, "determined", nodes, time.monotonic() - start, Permutation(sigma),
                                    {"stage_one": len(found)})
    return SearchResult(1, "determined", nodes, time.monotonic() - start, None, {"stage_one": len(found)})


def confirm_staged_n6(budget: Optional[Budget] = None, workers: Optional[int] = None) -> SearchResult:
    """No length-14 S_6(213)-superpattern exists (hours-class run)."""
    return confirm_staged([(2, 1, 3)], 6, 14, budget, workers)


def spot_check_prunes(
    forbidden: Iterable[Sequence[int]], n: int, length: int, samples: int = 100, seed: int = 0
) -> int:
    """Re-examine randomly drawn pruned candidates with the plain oracle.

    A candidate is pruned when its shape violates the subsequence bounds or
    when a class symmetry maps it to a smaller permutation.  Returns the
    number of pruned candidates checked; raises if a shape-pruned candidate
    is a superpattern or a symmetry-pruned one disagrees with its image.
    """
    forbidden = _norm(forbidden)
    rng = random.Random(seed)
    a, b = _shape_bounds(forbidden, n)
    maps = [SYMMETRIES[s] for s in class_symmetries(forbidden)]
    checked = 0
    tries = 0
    while checked < samples and tries < 100 * samples:
        tries += 1
        sigma = list(range(1, length + 1))
        rng.shuffle(sigma)
        sigma = tuple(sigma)
        shape = rsk_shape(sigma)
        if shape[0] < a or len(shape) < b:
            if is_superpattern(sigma, forbidden, n):
                raise AssertionError(f"shape-pruned {sigma} is a superpattern")
            checked += 1
        elif maps and not _canonical(sigma, maps):
            image = min(f(sigma) for f in maps)
            if is_superpattern(sigma, forbidden, n) != is_superpattern(image, forbidden, n):
                raise AssertionError(f"symmetry-pruned {sigma} disagrees with {image}")
            checked += 1
    return checked


def brute_force_minimal_length(forbidden: Iterable[Sequence[int]], n: int, max_length: int = 9) -> Optional[int]:
    """Unpruned oracle: try every permutation of each length in turn."""
    forbidden = _norm(forbidden)
    for length in range(n, max_length + 1):
        for sigma in permutations(range(1, length + 1)):
            if is_superpattern(sigma, forbidden, n):
                return length
    return None
