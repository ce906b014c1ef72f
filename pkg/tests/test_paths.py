from math import comb

import pytest
from hypothesis import given, strategies as st

from heapdyck import bijections, multisets, paths
from heapdyck.paths import BadCharError, EmptyWordError, NotGrandDyckError

from oracles import catalan, motzkin

EXAMPLE_WORD = "UUDDDUUDDUUUDDDU"


def grand_dyck_words(max_n=7):
    """Arbitrary grand-Dyck words, generated through the staircase encoding."""
    return st.lists(st.integers(1, max_n), min_size=1, max_size=max_n).map(
        lambda vs: bijections.multiset_to_path(
            multisets.validate(sorted(min(v, len(vs)) for v in vs), len(vs))
        )
    )


class TestParse:
    def test_accepts_ud(self):
        assert paths.parse("UUDD") == "UUDD"

    def test_rejects_empty(self):
        with pytest.raises(EmptyWordError):
            paths.parse("")

    @pytest.mark.parametrize("bad", ["UDx", "ud", "U D"])
    def test_rejects_other_chars(self, bad):
        with pytest.raises(BadCharError):
            paths.parse(bad)


class TestClassify:
    def test_dyck(self):
        flags = paths.classify("UUDD")
        assert flags.balanced and flags.dyck and flags.grand_dyck

    def test_grand_dyck_not_dyck(self):
        flags = paths.classify("UDDU")
        assert flags.grand_dyck and not flags.dyck

    def test_starts_with_d(self):
        flags = paths.classify("DUUD")
        assert flags.balanced and not flags.grand_dyck

    def test_unbalanced(self):
        assert not paths.classify("UUD").balanced


class TestCrossings:
    def test_example_word(self):
        assert paths.crossings(EXAMPLE_WORD) == (4, 6, 8, 10, 14)

    def test_touch_is_not_crossing(self):
        assert paths.crossings("UDUD") == ()

    def test_dyck_words_never_cross(self):
        for w in paths.enumerate_family("dyck", 5):
            assert paths.crossings(w) == ()

    def test_modified_heights_example(self):
        assert paths.modified_heights(EXAMPLE_WORD) == [
            0, 1, 2, 1, 0, 0, -1, -1, -2, -2, -3, -3, -2, -3, -4, -4, -5,
        ]


class TestHeightStats:
    def test_uudd(self):
        s = paths.height_stats("UUDD")
        assert s.semilength == 2
        assert s.cross == 0
        assert s.height_max == 2
        assert s.nbu_profile == {1: 1, 2: 1}
        assert s.d_end_heights == (1, 0)
        assert s.dud_count == 0
        assert s.udu_count == 0

    def test_uddu(self):
        s = paths.height_stats("UDDU")
        assert s.cross == 1
        assert s.height_max == 1
        assert s.d_end_heights == (0, 0)
        assert s.nbu_profile == {1: 1, -1: 1}

    def test_example_word(self):
        s = paths.height_stats(EXAMPLE_WORD)
        assert s.cross == 5
        assert s.d_end_heights == (1, 0, 0, -2, -2, -3, -4, -4)

    def test_rejects_non_grand_dyck(self):
        with pytest.raises(NotGrandDyckError):
            paths.height_stats("DUUD")
        with pytest.raises(NotGrandDyckError):
            paths.height_stats("UUD")

    @given(grand_dyck_words())
    def test_profile_sizes(self, w):
        s = paths.height_stats(w)
        assert sum(s.nbu_profile.values()) == s.semilength
        assert len(s.d_end_heights) == s.semilength
        assert s.height_max >= 1


class TestPatterns:
    def test_overlapping_udu(self):
        assert paths.pattern_count("UDUDUD", "UDU") == 2

    def test_dud(self):
        assert paths.pattern_count("UDUD", "DUD") == 1

    @given(grand_dyck_words())
    def test_patterns_survive_reversal(self, w):
        r = paths.reverse(w)
        assert paths.pattern_count(w, "DUD") == paths.pattern_count(r, "DUD")
        assert paths.pattern_count(w, "UDU") == paths.pattern_count(r, "UDU")

    @given(grand_dyck_words())
    def test_reverse_involution(self, w):
        assert paths.reverse(paths.reverse(w)) == w


class TestEnumerate:
    def test_grand_dyck_2(self):
        assert list(paths.enumerate_family("grand_dyck", 2)) == [
            "UUDD",
            "UDUD",
            "UDDU",
        ]

    def test_grand_dyck_star_4_count(self):
        assert paths.count_family("grand_dyck_star", 4) == 13

    @pytest.mark.parametrize("n", range(1, 9))
    def test_counts(self, n):
        assert paths.count_family("dyck", n) == catalan(n)
        assert paths.count_family("dyck_star", n) == motzkin(n - 1)
        assert paths.count_family("grand_dyck", n) == comb(2 * n - 1, n - 1)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_star_and_udu_free_agree(self, n):
        assert paths.count_family("grand_dyck_star", n) == paths.count_family(
            "grand_dyck_udu_free", n
        )

    def test_families_are_filters(self):
        everything = set(paths.enumerate_family("grand_dyck", 4))
        star = set(paths.enumerate_family("grand_dyck_star", 4))
        assert star == {w for w in everything if "DUD" not in w}
        dyck = set(paths.enumerate_family("dyck", 4))
        assert dyck == {w for w in everything if min(paths.heights(w)) >= 0}

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            list(paths.enumerate_family("nope", 2))

    def test_deterministic_order(self):
        a = list(paths.enumerate_family("grand_dyck", 5))
        b = list(paths.enumerate_family("grand_dyck", 5))
        assert a == b
        assert len(set(a)) == len(a)
