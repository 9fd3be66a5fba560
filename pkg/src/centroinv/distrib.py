"""Statistic distributions over the object classes, as q-polynomials.

distribution(label, size, stat) streams a class and tallies one statistic;
the result records the tally as a polynomial (coefficient of q^i counts the
objects with statistic i) plus the stream length.

With jobs > 1 the stream is split into shards (one per worker process, cut
by the leading choice of each object) and the per-shard tallies are added;
polynomial addition is commutative, so a sharded run is byte-identical to a
serial one.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from centroinv import generate, matchings, paths, perms, signed
from centroinv.qpoly import QPoly, peval, qpoly

STATS = ("des+", "maj+", "des", "maj", "fp", "area", "peaks")

_PERM_CLASSES = ("cinv321-even", "cinv321-odd", "inv321")
_SIGNED_CLASSES = ("signed-all", "signed-sixavoiders")

_PERM_STATS = {
    "des+": perms.half_des,
    "maj+": perms.half_maj,
    "des": perms.des,
    "maj": perms.maj,
    "fp": perms.fixed_point_count,
}

_SUBSET_STATS = {
    "des+": matchings.subset_des,
    "maj+": matchings.subset_maj,
    "des": matchings.des_from_subset,
}

_PATH_STATS = {
    "area": paths.area,
    "peaks": lambda w: len(paths.peak_star(w)),
}


def stat_function(label: str, stat: str):
    """Evaluator for a statistic on objects of a class; raises on
    incompatible pairs."""
    if label in _PERM_CLASSES:
        table = _PERM_STATS
    elif label == "subsets":
        table = _SUBSET_STATS
    elif label == "paths-rect":
        table = _PATH_STATS
    elif label in _SIGNED_CLASSES:
        if stat not in _PERM_STATS:
            raise ValueError(f"stat {stat!r} not defined for class {label!r}")
        inner = _PERM_STATS[stat]
        return lambda s: inner(signed.theta_inverse(s))
    else:
        raise ValueError(f"unknown class {label!r}")
    if stat not in table:
        raise ValueError(f"stat {stat!r} not defined for class {label!r}")
    return table[stat]


@dataclass(frozen=True)
class DistributionTable:
    label: str
    size: int
    stat: str
    poly: QPoly
    count: int


def _shard_tally(args: tuple[str, int, str, int, int]) -> dict[int, int]:
    label, size, stat, shard, nshards = args
    fn = stat_function(label, stat)
    tally: dict[int, int] = {}
    for obj in generate.generate_class(label, size, shard, nshards):
        v = fn(obj)
        tally[v] = tally.get(v, 0) + 1
    return tally


def distribution(
    label: str, size: int, stat: str, jobs: int = 1
) -> DistributionTable:
    """Tally one statistic over one class.

    >>> distribution("cinv321-even", 4, "des").poly
    (1, 2, 1)
    """
    stat_function(label, stat)  # reject bad pairs before forking workers
    if jobs < 1:
        raise ValueError("jobs must be positive")
    if jobs == 1:
        tallies = [_shard_tally((label, size, stat, 0, 1))]
    else:
        argses = [(label, size, stat, k, jobs) for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            tallies = list(pool.map(_shard_tally, argses))
    merged: dict[int, int] = {}
    for t in tallies:
        for v, c in t.items():
            merged[v] = merged.get(v, 0) + c
    top = max(merged, default=-1)
    poly = qpoly(merged.get(i, 0) for i in range(top + 1))
    return DistributionTable(label, size, stat, poly, peval(poly, 1))


def table_json(t: DistributionTable) -> str:
    return json.dumps(
        {
            "class": t.label,
            "size": t.size,
            "stat": t.stat,
            "poly": list(t.poly),
            "count": t.count,
        }
    )


def table_tsv(t: DistributionTable) -> str:
    lines = ["exponent\tcoefficient"]
    lines.extend(f"{i}\t{c}" for i, c in enumerate(t.poly))
    return "\n".join(lines)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
