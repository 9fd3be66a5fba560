"""Permutations in one-line notation, with descent and excedance statistics.

A permutation of [m] = {1, ..., m} is stored as the tuple ``(p(1), ..., p(m))``
of 1-based values; the empty tuple is the unique permutation of [0].  All
positions reported by the ``*_set`` functions are 1-based and sorted ascending.

The classes studied here are involutions (p equal to its own inverse) that are
centrosymmetric (p(i) + p(m+1-i) = m+1 for all i) and avoid the pattern 321.
Both membership tests run in linear time.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

Perm = tuple[int, ...]


def check_perm(p: Sequence[int]) -> None:
    """Raise ValueError unless p is a rearrangement of 1..len(p)."""
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")


def parse_perm(text: str) -> Perm:
    """Parse space-separated one-line notation.

    >>> parse_perm("2 1 4 3")
    (2, 1, 4, 3)
    """
    p = tuple(int(tok) for tok in text.split())
    check_perm(p)
    return p


def format_perm(p: Perm) -> str:
    return " ".join(str(v) for v in p)


def identity(m: int) -> Perm:
    return tuple(range(1, m + 1))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p, start=1):
        inv[v - 1] = i
    return tuple(inv)


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(i) = p(q(i)); sizes must agree."""
    if len(p) != len(q):
        raise ValueError("size mismatch")
    return tuple(p[v - 1] for v in q)


def reverse(p: Perm) -> Perm:
    return p[::-1]


def complement(p: Perm) -> Perm:
    m = len(p)
    return tuple(m + 1 - v for v in p)


def is_involution(p: Perm) -> bool:
    return all(p[v - 1] == i for i, v in enumerate(p, start=1))


def is_centrosymmetric(p: Perm) -> bool:
    """True iff p(i) + p(m+1-i) = m+1 for all i.

    >>> is_centrosymmetric((2, 1, 4, 3))
    True
    >>> is_centrosymmetric((1, 3, 2))
    False
    """
    m = len(p)
    return all(p[i] + p[m - 1 - i] == m + 1 for i in range(m))


def descent_set(p: Perm) -> tuple[int, ...]:
    """Positions i with p(i) > p(i+1), ascending.

    >>> descent_set((3, 4, 1, 2))
    (2,)
    """
    return tuple(i for i in range(1, len(p)) if p[i - 1] > p[i])


def des(p: Perm) -> int:
    return len(descent_set(p))


def maj(p: Perm) -> int:
    """Sum of the descent positions."""
    return sum(descent_set(p))


def half_descent_set(p: Perm) -> tuple[int, ...]:
    """Descents at positions at most floor(m/2).

    For a centrosymmetric p the full descent set is recoverable from this
    half: i is a descent iff m-i is.
    """
    n = len(p) // 2
    return tuple(i for i in range(1, n + 1) if p[i - 1] > p[i])


def half_des(p: Perm) -> int:
    return len(half_descent_set(p))


def half_maj(p: Perm) -> int:
    return sum(half_descent_set(p))


def excedance_set(p: Perm) -> tuple[int, ...]:
    """Positions i with p(i) > i, ascending."""
    return tuple(i for i, v in enumerate(p, start=1) if v > i)


def fixed_point_count(p: Perm) -> int:
    return sum(1 for i, v in enumerate(p, start=1) if v == i)


# ---------- pattern containment ----------


def contains_321(p: Perm) -> bool:
    """True iff some i < j < k has p(i) > p(j) > p(k).  Linear scan.

    An entry that is not a left-to-right maximum can serve as the middle
    letter of a 321; it suffices to remember the largest such entry.

    >>> contains_321((4, 2, 3, 1))
    True
    >>> contains_321((2, 1, 3, 5, 4))
    False
    """
    best_mid = 0
    prefix_max = 0
    for v in p:
        if v < best_mid:
            return True
        if v < prefix_max:
            if v > best_mid:
                best_mid = v
        else:
            prefix_max = v
    return False


def contains_123(p: Perm) -> bool:
    """True iff p has an increasing subsequence of length three."""
    return contains_321(complement(p))


def _rank_word(vals: Sequence[int]) -> tuple[int, ...]:
    # relative order of a sequence of distinct entries
    order = sorted(range(len(vals)), key=vals.__getitem__)
    rank = [0] * len(vals)
    for r, idx in enumerate(order, start=1):
        rank[idx] = r
    return tuple(rank)


def contains_pattern_naive(p: Perm, t: Perm) -> bool:
    """Exhaustive subsequence scan; the reference check for any pattern."""
    k = len(t)
    if k > len(p):
        return False
    if k == 0:
        return True
    target = _rank_word(t)
    for pos in combinations(range(len(p)), k):
        if _rank_word([p[i] for i in pos]) == target:
            return True
    return False


def contains_pattern(p: Perm, t: Perm) -> bool:
    """Pattern containment; 321 and 123 get the linear scan, the rest the
    exhaustive check."""
    t = tuple(t)
    if t == (3, 2, 1):
        return contains_321(p)
    if t == (1, 2, 3):
        return contains_123(p)
    return contains_pattern_naive(p, t)


def avoids(p: Perm, t: Perm) -> bool:
    return not contains_pattern(p, t)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
