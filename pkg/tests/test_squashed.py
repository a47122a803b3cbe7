"""Squashed (colex) order: comparison, ranking, segments, text forms."""

import pytest
from hypothesis import given, strategies as st

from kktools import (
    SetFamily,
    Subset,
    binom,
    compare_squashed,
    first_segment,
    format_subset,
    last_segment,
    level_masks,
    parse_subset,
    rank,
    segment_after,
    unrank,
)

# the ten 3-subsets of {1..5} in squashed order
LISTING_5_3 = ["123", "124", "134", "234", "125", "135", "235", "145", "245", "345"]


def test_three_subsets_of_five_listing():
    got = [format_subset(unrank(m, 5, 3)) for m in range(10)]
    assert got == LISTING_5_3


def test_rank_inverts_listing():
    for m, text in enumerate(LISTING_5_3):
        assert rank(parse_subset(text, 5)) == m


@given(st.integers(min_value=1, max_value=12), st.data())
def test_rank_unrank_roundtrip(n, data):
    k = data.draw(st.integers(min_value=0, max_value=n))
    m = data.draw(st.integers(min_value=0, max_value=binom(n, k) - 1))
    s = unrank(m, n, k)
    assert s.size == k
    assert rank(s) == m


def test_unrank_out_of_range():
    with pytest.raises(ValueError):
        unrank(10, 5, 3)


def test_compare_is_numeric_order_on_masks():
    # for equal sizes the squashed order is the numeric order of bitmasks
    for n in (4, 5):
        for k in range(n + 1):
            masks = level_masks(n, k)
            assert masks == sorted(masks)
            subs = [Subset.from_mask(m, n) for m in masks]
            for i, a in enumerate(subs):
                for j, b in enumerate(subs):
                    expected = (i > j) - (i < j)
                    assert compare_squashed(a, b) == expected


def test_compare_via_symmetric_difference():
    a = parse_subset("134", 5)
    b = parse_subset("234", 5)
    assert compare_squashed(a, b) == -1
    assert compare_squashed(b, a) == 1
    assert compare_squashed(a, a) == 0


def test_segments_partition_the_level():
    n, k = 6, 3
    total = binom(n, k)
    for m in range(total + 1):
        first = first_segment(n, k, m)
        rest = segment_after(n, k, m, total - m)
        assert len(first) == m and len(rest) == total - m
        assert sorted(first.masks() + rest.masks()) == level_masks(n, k)
    # the last m sets are the complement of the first total-m
    for m in range(total + 1):
        last = last_segment(n, k, m)
        first = first_segment(n, k, total - m)
        assert sorted(last.masks() + first.masks()) == level_masks(n, k)


def test_segment_after_zero_is_first_segment():
    assert segment_after(5, 2, 0, 4).masks() == first_segment(5, 2, 4).masks()


def test_segment_bounds_checked():
    with pytest.raises(ValueError):
        first_segment(4, 2, 7)
    with pytest.raises(ValueError):
        segment_after(4, 2, 3, 5)


def test_subset_canonicalization_and_errors():
    s = Subset((3, 1, 4), 5)
    assert s.elements == (1, 3, 4)
    assert s.mask == 0b01101
    assert Subset((2, 2, 4), 5).elements == (2, 4)  # duplicates collapse
    with pytest.raises(ValueError):
        Subset((0, 2), 5)
    with pytest.raises(ValueError):
        Subset((2, 6), 5)


def test_text_forms():
    assert format_subset(Subset((), 4)) == "{}"
    assert format_subset(Subset((1, 3, 4), 5)) == "134"
    assert format_subset(Subset((2, 10), 12)) == "{2,10}"
    for text in ("134", "{1,3,4}", "1,3,4", "1 3 4"):
        assert parse_subset(text, 5).elements == (1, 3, 4)
    assert parse_subset("{}", 4).elements == ()
    assert parse_subset("", 4).elements == ()
    with pytest.raises(ValueError):
        parse_subset("{1,2", 4)
    with pytest.raises(ValueError):
        parse_subset("x3", 4)


def test_family_dedups_and_iterates_in_squashed_order():
    fam = SetFamily.of([(2, 3), (1, 2), (2, 3)], 4)
    assert len(fam) == 2
    assert [format_subset(s) for s in fam] == ["12", "23"]
    assert fam.is_uniform and fam.uniform_size() == 2


def test_family_mixed_sizes_order_by_size_first():
    fam = SetFamily.of([(1, 2, 3), (4,), (1, 2)], 4)
    assert [s.size for s in fam] == [1, 2, 3]
    assert not fam.is_uniform
    with pytest.raises(ValueError):
        fam.uniform_size()
