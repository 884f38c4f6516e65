"""Strict partitions and the statistics attached to them.

Partitions are plain tuples of strictly decreasing positive integers.  The
"plus" variants may end with a zero part, which counts towards the length.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations


def is_strict(lam, plus: bool = False) -> bool:
    lam = tuple(lam)
    if any(a <= b for a, b in zip(lam, lam[1:])):
        return False
    return not lam or lam[-1] > 0 or (plus and lam[-1] == 0)


@lru_cache(maxsize=None)
def strict_partitions(n: int, plus: bool = False) -> tuple[tuple[int, ...], ...]:
    """Strict partitions with parts in {1..n} (or {0..n} when plus).

    Ordered by weight, then lexicographically descending.
    """
    parts = list(range(n, -1 if plus else 0, -1))
    out = [c for k in range(len(parts) + 1) for c in combinations(parts, k)]
    out.sort(key=lambda p: (sum(p), tuple(-v for v in p), -len(p)))
    return tuple(out)


def staircase(k: int) -> tuple[int, ...]:
    return tuple(range(k, 0, -1))


def dual(lam, k: int) -> tuple[int, ...]:
    """The complement of lam in the staircase (k, k-1, ..., 1); zeros ignored."""
    s = set(p for p in lam if p)
    if any(p > k for p in s):
        raise ValueError(f"{lam} does not fit in rank {k}")
    return tuple(p for p in range(k, 0, -1) if p not in s)


def union(a, b) -> tuple[int, ...]:
    return tuple(sorted(set(a) | set(b), reverse=True))


def weight(lam) -> int:
    return sum(lam)


def excess(lam) -> int:
    """|lam| - l(l+1)/2."""
    l = len(lam)
    return sum(lam) - l * (l + 1) // 2


def intertwining(alpha, beta) -> int:
    """sum_i i * #{j : alpha_i > beta_j > alpha_{i+1}}, with alpha_{l+1} = 0."""
    a = tuple(alpha) + (0,)
    total = 0
    for i in range(len(alpha)):
        m = sum(1 for b in beta if a[i] > b > a[i + 1])
        total += (i + 1) * m
    return total


def weak_intertwining(alpha, beta) -> int:
    """Like intertwining but with the lower bound alpha_{i+1} allowed."""
    a = tuple(alpha) + (0,)
    total = 0
    for i in range(len(alpha)):
        m = sum(1 for b in beta if a[i] > b >= a[i + 1])
        total += (i + 1) * m
    return total


def contains(big, small) -> bool:
    """Diagram containment: big_i >= small_i for every i."""
    if len(small) > len(big):
        return False
    return all(b >= s for b, s in zip(big, small))


def d_length(lam, n: int) -> int:
    """The length k of the dual in the type D formulas."""
    l = len(lam)
    return n - l if (n - l) % 2 == 0 else n - l - 1


def d_sign_exponent(lam, n: int) -> int:
    """e(lam) + l(lam) when n = l(lam) mod 2, else e(lam)."""
    l = len(lam)
    return excess(lam) + (l if (n - l) % 2 == 0 else 0)


def d_dual(lam, n: int) -> tuple[int, ...]:
    """Dual of lam in rank n-1, padded with a zero part to length k."""
    lp = dual(lam, n - 1)
    k = d_length(lam, n)
    return lp + (0,) * (k - len(lp))
