"""Palindrome engine vs brute-force oracles, plus the engine's own
consistency laws."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from kbona.palindromes import (
    CutSpec,
    Occurrence,
    classify_crossing,
    count_occurrences,
    distinct_factors,
    enumerate_maximal,
    is_palindrome,
    maximal_radii,
)
from kbona.words import DomainError, Word, shift_add, word

from oracles import (
    brute_count,
    brute_crossing,
    brute_distinct,
    brute_maximal,
    brute_radii,
)

random_digits = st.lists(st.integers(min_value=0, max_value=19), max_size=60)


def test_is_palindrome_examples():
    assert is_palindrome(Word())
    assert is_palindrome(Word.parse("10201"))
    assert not is_palindrome(Word.parse("0102"))


def test_radii_examples():
    profile = maximal_radii(Word.parse("0102010"))
    assert profile.lengths[0::2] == (1, 3, 1, 7, 1, 3, 1)
    assert all(v == 0 for v in profile.lengths[1::2])
    profile = maximal_radii(Word.parse("33"))
    assert profile.lengths == (1, 2, 1)
    assert maximal_radii(Word()).lengths == ()


def test_occurrence_geometry():
    occ = Occurrence(2, 5)
    assert occ.end == 6
    assert occ.doubled_center == 8  # c_p = 4, odd length -> even doubled center
    assert Occurrence(1, 2).doubled_center == 3  # even length -> odd


def test_enumerate_examples():
    occs = enumerate_maximal(Word.parse("0102013"), 2)
    assert [(o.start, o.length) for o in occs] == [(1, 3), (2, 5)]
    assert [(o.start, o.length) for o in enumerate_maximal(Word.parse("33"), 2)] == [(1, 2)]
    assert enumerate_maximal(Word.parse("012"), 2) == []


def test_count_examples():
    assert count_occurrences(Word.parse("0102"), 2) == 1
    assert count_occurrences(Word.parse("01020103"), 2) == 5
    assert count_occurrences(Word.parse("010201030102014"), 2) == 14


def test_distinct_examples():
    got = distinct_factors(Word.parse("0102013"), 2)
    assert got == {Word.parse("010"), Word.parse("020"), Word.parse("10201")}
    assert distinct_factors(Word.parse("111"), 2) == {Word.parse("11"), Word.parse("111")}
    assert Word((3, 3)) in distinct_factors(word(3, 5), 2)


def test_min_len_domain():
    for fn in (count_occurrences, enumerate_maximal, distinct_factors):
        with pytest.raises(DomainError):
            fn(Word.parse("010"), 0)


@given(random_digits)
@settings(max_examples=300)
def test_radii_against_oracle(digits):
    w = Word(digits)
    assert list(maximal_radii(w).lengths) == brute_radii(w)


@given(random_digits, st.integers(min_value=1, max_value=3))
@settings(max_examples=300)
def test_counts_against_oracle(digits, min_len):
    w = Word(digits)
    assert count_occurrences(w, min_len) == brute_count(w, min_len)


@given(random_digits, st.integers(min_value=1, max_value=3))
@settings(max_examples=200)
def test_maximal_against_oracle(digits, min_len):
    w = Word(digits)
    assert enumerate_maximal(w, min_len) == brute_maximal(w, min_len)


@given(random_digits, st.integers(min_value=1, max_value=3))
@settings(max_examples=200)
def test_distinct_against_oracle(digits, min_len):
    w = Word(digits)
    assert distinct_factors(w, min_len) == brute_distinct(w, min_len)


def _random_word(rng):
    length = rng.randint(0, 300)
    sigma = rng.randint(1, 20)
    return Word(rng.randrange(sigma) for _ in range(length))


def test_random_battery():
    """Seeded sweep over longer words than hypothesis reaches."""
    rng = random.Random(20240811)
    for _ in range(120):
        w = _random_word(rng)
        for min_len in (1, 2, 3):
            assert count_occurrences(w, min_len) == brute_count(w, min_len)
        assert list(maximal_radii(w).lengths) == brute_radii(w)
        assert distinct_factors(w, 2) == brute_distinct(w, 2)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_engine_on_generated_words(k):
    for n in range(9):
        w = word(k, n)
        for min_len in (1, 2, 3):
            assert count_occurrences(w, min_len) == brute_count(w, min_len)
        assert enumerate_maximal(w, 2) == brute_maximal(w, 2)
        assert distinct_factors(w, 2) == brute_distinct(w, 2)


@given(random_digits, st.integers(min_value=0, max_value=7))
@settings(max_examples=150)
def test_shift_invariance(digits, d):
    w = Word(digits)
    shifted = shift_add(d, w)
    assert count_occurrences(shifted, 2) == count_occurrences(w, 2)
    assert distinct_factors(shifted, 2) == {
        shift_add(d, p) for p in distinct_factors(w, 2)
    }


@given(random_digits)
@settings(max_examples=200)
def test_count_consistency_with_maximal(digits):
    w = Word(digits)
    for min_len in (1, 2, 3):
        total = 0
        for occ in enumerate_maximal(w, 1):
            length = occ.length
            while length >= min_len:
                total += 1
                length -= 2
        assert count_occurrences(w, min_len) == total


def test_radius_profile_invariants():
    for w in (word(3, 6), Word.parse("3434343"), Word((5, 5, 5, 5))):
        profile = maximal_radii(w)
        for c, m in enumerate(profile.lengths):
            if c % 2 == 0:
                assert m % 2 == 1 and m >= 1
            else:
                assert m % 2 == 0 and m >= 0


def _cutspec_for(w, rng):
    positions = sorted(rng.sample(range(1, len(w)), rng.randint(1, 3)))
    return CutSpec(tuple(positions))


def test_classify_crossing_against_oracle():
    rng = random.Random(7)
    for _ in range(60):
        w = Word(rng.randrange(6) for _ in range(rng.randint(5, 80)))
        cuts = _cutspec_for(w, rng)
        got = classify_crossing(w, cuts, 2)
        contained, bordering, straddling = brute_crossing(w, cuts, 2)
        assert got.contained == contained
        assert got.bordering == bordering
        assert got.straddling == straddling
        assert got.total == count_occurrences(w, 2)


def test_classify_crossing_single_block():
    w = word(3, 5)
    got = classify_crossing(w, CutSpec(()), 2)
    assert got.contained == count_occurrences(w, 2)
    assert got.straddling == 0 and not got.bordering


def test_classify_crossing_invalid_cuts():
    w = Word.parse("0102")
    with pytest.raises(DomainError):
        classify_crossing(w, CutSpec((0,)), 2)
    with pytest.raises(DomainError):
        classify_crossing(w, CutSpec((2, 2)), 2)
    with pytest.raises(DomainError):
        classify_crossing(w, CutSpec((4,)), 2)
