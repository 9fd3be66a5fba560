"""Lattice paths, Young diagrams in a box, hook decompositions.

A path is a word over the alphabet {N, E}, read as unit north/east steps from
(0,0).  A word with a letters N and b letters E lives in the a x b rectangle
and ends at (b, a); the boxes northwest of the path form a Young diagram with
at most a rows of length at most b (rows listed top-down, longest first).

Statistics and maps:

* area: number of boxes of that diagram, i.e. one box per (E step, later N
  step) pair;
* peaks: vertices where an N step is followed immediately by an E step,
  labelled by the number of steps taken so far (so labels lie in 1..len-1);
  the starred variant appends a virtual E step, adding the label len when the
  word ends with N;
* hook decomposition: sizes of the hooks peeled repeatedly off the top-left
  corner of the diagram, listed ascending; their number is the Durfee side
  and their sum is the area;
* g: the bijection of the rectangle that turns peak labels into hook sizes.

Subsets of [n] embed as paths of length n (step i is N iff i is a member),
which transports descent statistics on the involution side to peak statistics
here.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from centroinv import matchings
from centroinv.matchings import Subset
from centroinv.perms import Perm, half_descent_set

ALPHABET = frozenset("NE")


def check_path(word: str) -> None:
    if set(word) - ALPHABET:
        raise ValueError(f"path must use letters N and E only: {word!r}")


def path_counts(word: str) -> tuple[int, int]:
    """(number of N steps, number of E steps)."""
    return word.count("N"), word.count("E")


def _fit_rectangle(word: str, a: int | None, b: int | None) -> tuple[int, int]:
    # a path determines its own rectangle; explicit a, b only assert it
    check_path(word)
    na, nb = path_counts(word)
    if a is None:
        a = na
    if b is None:
        b = nb
    if (na, nb) != (a, b):
        raise ValueError(
            f"path has {na} N and {nb} E steps, does not fit a {a} x {b} rectangle"
        )
    return a, b


def subset_path(e: Subset) -> str:
    """Path of length n whose N steps sit at the members of e."""
    return "".join("N" if i in e.members else "E" for i in range(1, e.n + 1))


def path_subset(word: str) -> Subset:
    check_path(word)
    return Subset(
        len(word), frozenset(i for i, s in enumerate(word, start=1) if s == "N")
    )


def peak_set(word: str) -> tuple[int, ...]:
    """Labels of NE corners.

    >>> peak_set("NENE")
    (1, 3)
    """
    check_path(word)
    return tuple(
        i for i in range(1, len(word)) if word[i - 1] == "N" and word[i] == "E"
    )


def peak_star(word: str) -> tuple[int, ...]:
    """Peaks after appending a virtual E step: adds the label len(word)
    exactly when the word ends with N."""
    check_path(word)
    return peak_set(word + "E")


def area(word: str) -> int:
    """Boxes northwest of the path: one per (E step, later N step) pair.

    >>> area("EENN")
    4
    >>> area("NENE")
    1
    """
    check_path(word)
    total = 0
    ns_after = 0
    for step in reversed(word):
        if step == "N":
            ns_after += 1
        else:
            total += ns_after
    return total


# ---------- Young diagrams ----------


def path_partition(word: str, a: int, b: int) -> tuple[int, ...]:
    """Partition of the diagram northwest of the path, rows top-down.

    >>> path_partition("EENN", 2, 2)
    (2, 2)
    >>> path_partition("NENE", 2, 2)
    (1,)
    """
    _fit_rectangle(word, a, b)
    e_before = []
    e = 0
    for s in word:
        if s == "E":
            e += 1
        else:
            e_before.append(e)
    return tuple(x for x in reversed(e_before) if x > 0)


def partition_path(parts: tuple[int, ...], a: int, b: int) -> str:
    """Southeast boundary of a partition drawn in the a x b rectangle."""
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("parts must be weakly decreasing")
    if len(parts) > a or (parts and parts[0] > b):
        raise ValueError(f"partition {parts} does not fit in {a} x {b}")
    padded = list(parts) + [0] * (a - len(parts))
    out = []
    prev = 0
    for row in reversed(padded):
        out.append("E" * (row - prev) + "N")
        prev = row
    out.append("E" * (b - prev))
    return "".join(out)


def parse_partition(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split(",") if tok.strip())


def format_partition(parts: tuple[int, ...]) -> str:
    return ",".join(str(r) for r in parts)


def hook_decomposition(word: str) -> tuple[int, ...]:
    """Hook sizes peeled off the top-left corner of the diagram, ascending.

    Peeling removes the first row and first column; the count of peels is the
    Durfee side and the sizes sum to the area.

    >>> hook_decomposition("EENN")
    (1, 3)
    """
    check_path(word)
    parts = list(path_partition(word, *path_counts(word)))
    hooks = []
    while parts:
        hooks.append(parts[0] + len(parts) - 1)
        parts = [r - 1 for r in parts[1:] if r > 1]
    return tuple(sorted(hooks))


def hd_star(word: str) -> tuple[int, ...]:
    """Hook sizes plus the extra label len(word) when the word starts with N
    (the counterpart of peak_star under g)."""
    hooks = hook_decomposition(word)
    if word.startswith("N"):
        return hooks + (len(word),)
    return hooks


# ---------- the peak/hook bijection ----------


def _peak_coords(word: str) -> list[tuple[int, int]]:
    coords = []
    x = y = 0
    for i, s in enumerate(word):
        if s == "N":
            y += 1
        else:
            if i > 0 and word[i - 1] == "N":
                coords.append((x, y))
            x += 1
    return coords


def g_map(word: str, a: int | None = None, b: int | None = None) -> str:
    """Rectangle bijection sending peak labels to hook sizes.

    With peaks at coordinates (x_j, y_j), the image is R_a ... R_1 S_1 ... S_b
    where the R run carries an E at each height y_j (N elsewhere) and the S
    run an N at each offset x_j + 1 (E elsewhere); the hook sizes of the image
    are then the x_j + y_j, i.e. the peak labels of the input.

    >>> g_map("NENE")
    'EENN'
    >>> hook_decomposition("EENN") == peak_set("NENE")
    True
    """
    a, b = _fit_rectangle(word, a, b)
    r_run = ["N"] * a
    s_run = ["E"] * b
    for x, y in _peak_coords(word):
        r_run[y - 1] = "E"
        s_run[x] = "N"
    return "".join(reversed(r_run)) + "".join(s_run)


def g_inverse(word: str, a: int | None = None, b: int | None = None) -> str:
    """Inverse of g_map: read off peak coordinates from the two runs and
    rebuild the unique path with exactly those peaks."""
    a, b = _fit_rectangle(word, a, b)
    r_run, s_run = word[:a], word[a:]
    ys = sorted(a - idx for idx, ch in enumerate(r_run) if ch == "E")
    xs = sorted(idx for idx, ch in enumerate(s_run) if ch == "N")
    out = []
    px = py = 0
    for x, y in zip(xs, ys):
        out.append("E" * (x - px) + "N" * (y - py))
        px, py = x, y
    out.append("E" * (b - px) + "N" * (a - py))
    return "".join(out)


def rotate_first_to_last(word: str) -> str:
    """Move the first step to the end.  Shifts area by +(number of E steps)
    when the word starts with N, by -(number of N steps) otherwise."""
    check_path(word)
    if not word:
        raise ValueError("empty path")
    return word[1:] + word[0]


def half_descents_from_path(p: Perm) -> tuple[int, ...]:
    """Half descent set of a class member, recomputed as starred peaks of the
    subset path; raises if the two routes would ever disagree."""
    transported = peak_star(subset_path(matchings.excedance_subset(p)))
    direct = half_descent_set(p)
    if transported != direct:
        raise ValueError(
            f"peak transport mismatch for {p}: {transported} vs {direct}"
        )
    return transported


# ---------- enumeration ----------


def rect_paths(a: int, b: int) -> Iterator[str]:
    """All binomial(a+b, a) paths of the a x b rectangle."""
    n = a + b
    for north_positions in combinations(range(n), a):
        chosen = set(north_positions)
        yield "".join("N" if i in chosen else "E" for i in range(n))


def all_paths(n: int) -> Iterator[str]:
    """All 2**n paths of length n, in subset-mask order."""
    for mask in range(1 << n):
        yield "".join("N" if mask >> i & 1 else "E" for i in range(n))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
