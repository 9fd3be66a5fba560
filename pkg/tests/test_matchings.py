"""Subset <-> matching <-> involution bijection and the carried statistics."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from centroinv import matchings
from centroinv.generate import involutions, subsets
from centroinv.matchings import (
    Matching,
    Subset,
    des_from_subset,
    excedance_subset,
    format_matching,
    format_subset,
    involution_matching,
    is_nonnesting,
    is_symmetric,
    matching,
    matching_permutation,
    odd_join,
    odd_split,
    parse_matching,
    parse_subset,
    singletons,
    subset,
    subset_des,
    subset_descents,
    subset_involution,
    subset_maj,
    subset_matching,
)
from centroinv.perms import (
    contains_321,
    des,
    half_des,
    half_descent_set,
    half_maj,
    is_centrosymmetric,
    is_involution,
    maj,
)


def subset_strategy(max_n=10):
    return st.integers(0, max_n).flatmap(
        lambda n: st.builds(
            lambda ms: Subset(n, frozenset(ms)),
            st.sets(st.sampled_from(range(1, n + 1)) if n else st.nothing()),
        )
    )


# ---------- matchings as objects ----------


def test_matching_validation():
    with pytest.raises(ValueError):
        Matching(4, ((1, 5),))
    with pytest.raises(ValueError):
        Matching(4, ((1, 2), (2, 3)))
    with pytest.raises(ValueError):
        Matching(4, ((3, 4), (1, 2)))  # unsorted
    assert matching(4, [(4, 3), (2, 1)]).arcs == ((1, 2), (3, 4))


def test_matching_text_round_trip():
    mch = matching(6, [(1, 2), (5, 6)])
    assert format_matching(mch) == "1-2,5-6"
    assert parse_matching("1-2,5-6", 6) == mch
    assert parse_matching("", 4).arcs == ()
    assert singletons(mch) == (3, 4)


def test_symmetry_and_nesting_predicates():
    assert is_symmetric(matching(4, [(1, 3), (2, 4)]))
    assert not is_symmetric(matching(4, [(1, 3)]))
    assert is_nonnesting(matching(4, [(1, 3), (2, 4)]))
    assert not is_nonnesting(matching(4, [(1, 4), (2, 3)]))
    # singleton inside an arc also nests
    assert not is_nonnesting(matching(4, [(1, 3)]))
    assert is_nonnesting(matching(4, [(3, 4)]))


# ---------- involution <-> matching ----------


def test_involution_matching_examples():
    assert involution_matching((2, 1, 4, 3)).arcs == ((1, 2), (3, 4))
    assert involution_matching((1, 3, 2, 4)).arcs == ((2, 3),)
    assert matching_permutation(matching(4, [(2, 3)])) == (1, 3, 2, 4)
    with pytest.raises(ValueError):
        involution_matching((3, 1, 2, 4))  # not an involution
    with pytest.raises(ValueError):
        involution_matching((2, 1, 3))  # odd size
    with pytest.raises(ValueError):
        involution_matching((1, 3, 2))  # not centrosymmetric, odd anyway
    with pytest.raises(ValueError):
        matching_permutation(matching(4, [(1, 4), (2, 3)]))  # nesting


def test_involution_matching_nesting_iff_contains_321():
    for p in involutions(6):
        if not is_centrosymmetric(p):
            continue
        mch = involution_matching(p)
        assert is_symmetric(mch)
        assert is_nonnesting(mch) == (not contains_321(p))


# ---------- the subset bijection ----------


def test_subset_parse_format():
    e = subset(5, {1, 4})
    assert format_subset(e) == "1,4"
    assert parse_subset("1,4", 5) == e
    assert parse_subset("", 5) == Subset(5, frozenset())
    with pytest.raises(ValueError):
        subset(3, {4})


def test_subset_matching_worked_example():
    # 22 points; mirror arcs interleave with the scanned ones
    e = subset(11, {1, 4, 5, 7, 8, 10})
    assert subset_matching(e).arcs == (
        (1, 2),
        (4, 6),
        (5, 9),
        (7, 11),
        (8, 13),
        (10, 15),
        (12, 16),
        (14, 18),
        (17, 19),
        (21, 22),
    )


def test_subset_involution_small_cases():
    assert subset_involution(subset(0, ())) == ()
    assert subset_involution(subset(2, ())) == (1, 2, 3, 4)
    assert subset_involution(subset(2, {1})) == (2, 1, 4, 3)
    assert subset_involution(subset(2, {2})) == (1, 3, 2, 4)
    assert subset_involution(subset(2, {1, 2})) == (3, 4, 1, 2)


def test_excedance_subset_membership_errors():
    with pytest.raises(ValueError):
        excedance_subset((2, 1, 3))  # odd size
    with pytest.raises(ValueError):
        excedance_subset((3, 1, 2, 4))  # not an involution
    with pytest.raises(ValueError):
        excedance_subset((2, 1, 3, 4))  # not centrosymmetric
    with pytest.raises(ValueError):
        excedance_subset((4, 3, 2, 1))  # contains 321


@given(subset_strategy())
def test_round_trip_random_subsets(e):
    p = subset_involution(e)
    assert is_involution(p) and is_centrosymmetric(p) and not contains_321(p)
    assert excedance_subset(p) == e


def test_bijection_exhaustive_small():
    for n in range(7):
        images = {subset_involution(e) for e in subsets(n)}
        assert len(images) == 1 << n
        direct = {
            p
            for p in involutions(2 * n)
            if is_centrosymmetric(p) and not contains_321(p)
        }
        assert images == direct


# ---------- statistics carried by subsets ----------


def test_subset_descents_examples():
    assert subset_descents(subset(3, {1, 3})) == (1, 3)
    assert subset_des(subset(3, {1, 3})) == 2
    assert subset_maj(subset(3, {1, 3})) == 4
    assert subset_descents(subset(4, {1, 2})) == (2,)
    assert subset_descents(subset(4, ())) == ()
    # n itself is always a descent when present
    assert subset_descents(subset(4, {4})) == (4,)


def test_des_from_subset_examples():
    assert des_from_subset(subset(2, {1})) == 2  # attached involution 2143
    assert des_from_subset(subset(2, {2})) == 1  # attached involution 1324
    assert des_from_subset(subset(2, ())) == 0


def test_subset_statistics_match_involution_statistics():
    for n in range(8):
        for e in subsets(n):
            p = subset_involution(e)
            assert subset_descents(e) == half_descent_set(p)
            assert subset_des(e) == half_des(p)
            assert subset_maj(e) == half_maj(p)
            assert des_from_subset(e) == des(p)


# ---------- odd sizes ----------


def test_odd_join_example():
    assert odd_join((2, 1)) == (2, 1, 3, 5, 4)
    assert odd_join(()) == (1,)
    assert odd_split((2, 1, 3, 5, 4)) == (2, 1)
    with pytest.raises(ValueError):
        odd_join((3, 1, 2))  # not an involution
    with pytest.raises(ValueError):
        odd_join((3, 2, 1))  # contains 321
    with pytest.raises(ValueError):
        odd_split((2, 1, 4, 3))  # even size
    with pytest.raises(ValueError):
        odd_split((1, 3, 2))  # not centrosymmetric


def test_odd_join_bijective_with_statistics():
    from math import comb

    for n in range(8):
        alphas = [
            a for a in involutions(n) if not contains_321(a)
        ]
        assert len(alphas) == comb(n, n // 2)
        images = set()
        for a in alphas:
            p = odd_join(a)
            assert is_involution(p) and is_centrosymmetric(p)
            assert not contains_321(p)
            assert odd_split(p) == a
            assert half_des(p) == des(a)
            assert half_maj(p) == maj(a)
            assert des(p) == 2 * des(a)
            images.add(p)
        assert len(images) == len(alphas)


def test_doctests():
    import doctest

    assert doctest.testmod(matchings).failed == 0
