"""Signed permutations and the half-window encoding of centrosymmetric maps.

A signed permutation of [n] is stored as its window (s(1), ..., s(n)), a
tuple of nonzero integers whose absolute values rearrange 1..n.  The group of
these is isomorphic to the centrosymmetric subgroup of the symmetric group on
[2n]: theta reads the second half of a centrosymmetric p and recentres it
around zero, and theta_inverse rebuilds p from the window.

Containment of a signed pattern asks for a subsequence whose absolute values
are order-isomorphic to those of the pattern and whose signs agree entrywise.
Avoiding the six patterns in TOP_PATTERNS characterises the image under theta
of the 321-avoiding centrosymmetric permutations; these are the fully
commutative top elements of the hyperoctahedral group.
"""

from __future__ import annotations

from itertools import combinations

from centroinv.perms import Perm, _rank_word, half_descent_set, is_centrosymmetric

SignedPerm = tuple[int, ...]

#: Signed patterns avoided by fully commutative top elements.
TOP_PATTERNS: tuple[SignedPerm, ...] = (
    (3, 2, 1),
    (-3, 2, 1),
    (3, 2, -1),
    (-3, 2, -1),
    (1, -2),
    (-1, -2),
)


def check_signed(s: SignedPerm) -> None:
    if any(v == 0 for v in s) or sorted(abs(v) for v in s) != list(
        range(1, len(s) + 1)
    ):
        raise ValueError(f"not a signed permutation window: {s!r}")


def parse_signed(text: str) -> SignedPerm:
    s = tuple(int(tok) for tok in text.split())
    check_signed(s)
    return s


def format_signed(s: SignedPerm) -> str:
    return " ".join(str(v) for v in s)


def theta(p: Perm) -> SignedPerm:
    """Window of a centrosymmetric permutation of even size 2n: entry i is
    p(n+i) - n when p(n+i) > n, else p(n+i) - n - 1.

    >>> theta((2, 4, 8, 6, 3, 1, 5, 7))
    (-2, -4, 1, 3)
    """
    if len(p) % 2:
        raise ValueError("even size required")
    if not is_centrosymmetric(p):
        raise ValueError("not centrosymmetric")
    n = len(p) // 2
    return tuple(
        v - n if v > n else v - n - 1 for v in (p[n + i] for i in range(n))
    )


def theta_inverse(s: SignedPerm) -> Perm:
    """Centrosymmetric permutation of [2n] whose window is s.

    >>> theta_inverse((-4, 3, 2, -1))
    (5, 3, 2, 8, 1, 7, 6, 4)
    """
    check_signed(s)
    n = len(s)
    back = [v + n if v > 0 else v + n + 1 for v in s]
    front = [2 * n + 1 - back[n - 1 - i] for i in range(n)]
    return tuple(front) + tuple(back)


def signed_contains(s: SignedPerm, t: SignedPerm) -> bool:
    """True iff some subsequence of s matches t in |value| order and in sign.

    >>> signed_contains((-4, 3, 2, -1), (3, 2, -1))
    True
    >>> signed_contains((1, 2), (1, -2))
    False
    """
    k = len(t)
    if k > len(s):
        return False
    if k == 0:
        return True
    target = _rank_word([abs(v) for v in t])
    for pos in combinations(range(len(s)), k):
        window = [s[i] for i in pos]
        if all((w > 0) == (v > 0) for w, v in zip(window, t)) and _rank_word(
            [abs(w) for w in window]
        ) == target:
            return True
    return False


def signed_avoids(s: SignedPerm, t: SignedPerm) -> bool:
    return not signed_contains(s, t)


def is_top_element(s: SignedPerm) -> bool:
    """True iff s avoids all six patterns in TOP_PATTERNS."""
    return all(signed_avoids(s, t) for t in TOP_PATTERNS)


def half_descents_signed(s: SignedPerm) -> tuple[int, ...]:
    """Descent set convention for windows: the half descent set of the
    centrosymmetric permutation behind s.  Defined by pullback on purpose,
    so both sides of the dictionary use one notion of descent."""
    return half_descent_set(theta_inverse(s))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
