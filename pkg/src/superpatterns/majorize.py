"""The sawtooth sequence xi_i = i XOR (i - 1), its partial sums, and
subsequence majorization against it."""

from __future__ import annotations

from typing import Sequence


def xi(i: int) -> int:
    """``i ^ (i - 1)``: 1, 3, 1, 7, 1, 3, 1, 15, ..."""
    if i < 1:
        raise ValueError("xi is indexed from 1")
    return i ^ (i - 1)


def zeta(n: int) -> int:
    """Sum of the first ``n`` terms of xi.

    Computed from the binary expansion of ``n``: a set bit ``2**k`` contributes
    ``2**k * (k + 1)``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total, k = 0, 0
    while n >> k:
        if (n >> k) & 1:
            total += (k + 1) << k
        k += 1
    return total


def majorize(alpha: Sequence[int]) -> list[int]:
    """Indices j_1 < ... < j_k <= sum(alpha) with ``alpha[i] <= xi(j_i)``.

    Splits at the first prefix of ``alpha`` reaching the largest power of two
    ``q <= sum(alpha)``, assigns that term to ``xi(q) = 2q - 1`` and recurses on
    both sides; the right half reuses the copy of xi that starts after ``q``.
    """
    alpha = list(alpha)
    if not alpha:
        raise ValueError("alpha must be nonempty")
    if any(a < 1 for a in alpha):
        raise ValueError("alpha entries must be positive")
    return _majorize(alpha)


def _majorize(alpha: list[int]) -> list[int]:
    if not alpha:
        return []
    n = sum(alpha)
    q = 1 << (n.bit_length() - 1)
    running = 0
    for split, a in enumerate(alpha):
        running += a
        if running >= q:
            break
    left = _majorize(alpha[:split])
    right = _majorize(alpha[split + 1:])
    return left + [q] + [q + j for j in right]
