import pytest
from hypothesis import example, given, strategies as st

from shufflecraft.words import (
    SquareOccurrence,
    check_word,
    count_square_free,
    enumerate_square_free,
    find_square,
    is_lyndon,
    is_square_free,
    lex_least_square_free_prefix,
    parikh,
)

ternary = st.text(alphabet="012", max_size=24)


def test_check_word_rejects_out_of_range_letters():
    assert check_word("0102", 3) == "0102"
    with pytest.raises(ValueError):
        check_word("013", 3)
    with pytest.raises(ValueError):
        check_word("0a2", 3)


def test_empty_and_single_letters_are_square_free():
    assert is_square_free("")
    assert is_square_free("0")
    assert is_square_free("012")


def test_find_square_reports_leftmost_shortest():
    assert find_square("00") == SquareOccurrence(0, 1)
    assert find_square("0102") is None
    # 012012 is a square of half-length 3 starting at 0
    assert find_square("012012") == SquareOccurrence(0, 3)
    # leftmost start wins, then the shortest half at that start
    assert find_square("201021201021") == SquareOccurrence(0, 6)
    assert find_square("0101") == SquareOccurrence(0, 2)


@given(ternary)
def test_find_square_agrees_with_is_square_free(w):
    occ = find_square(w)
    assert (occ is None) == is_square_free(w)
    if occ is not None:
        start, half = occ
        assert w[start : start + half] == w[start + half : start + 2 * half]


@given(ternary, ternary)
def test_square_freeness_is_factor_closed(u, v):
    if is_square_free(u + v):
        assert is_square_free(u)
        assert is_square_free(v)


def test_known_ternary_counts():
    # 3 singles, 6 square-free pairs, then the classic sequence
    expected = {0: 1, 1: 3, 2: 6, 3: 12, 4: 18, 5: 30, 6: 42, 7: 60}
    for length, count in expected.items():
        assert count_square_free(3, length) == count


def test_enumeration_is_sorted_and_complete():
    words = list(enumerate_square_free(3, 4))
    assert words == sorted(words)
    assert len(words) == 18
    assert all(is_square_free(w) and len(w) == 4 for w in words)
    assert words[0] == "0102"


def test_binary_square_free_words_die_out():
    assert count_square_free(2, 3) == 2  # 010 and 101
    assert count_square_free(2, 4) == 0


@given(st.integers(min_value=0, max_value=9))
def test_count_matches_enumeration(length):
    assert count_square_free(3, length) == len(list(enumerate_square_free(3, length)))


def test_parikh_counts_letters():
    assert parikh("0102", 3) == (2, 1, 1)
    assert parikh("", 3) == (0, 0, 0)
    assert parikh("33", 4) == (0, 0, 0, 2)


def test_lyndon_examples():
    assert is_lyndon("01202102")
    assert is_lyndon("0102120210201202")
    assert not is_lyndon("10")
    assert not is_lyndon("0101")
    assert is_lyndon("0")
    with pytest.raises(ValueError):
        is_lyndon("")


@given(ternary.filter(lambda w: len(w) >= 1))
def test_lyndon_means_least_rotation_strictly(w):
    rotations = {w[i:] + w[:i] for i in range(len(w))}
    expected = len(rotations) == len(w) and w == min(rotations)
    assert is_lyndon(w) == expected


@example(n=1)
@example(n=27)
@given(st.integers(min_value=0, max_value=40))
def test_lex_least_prefix_is_least(n):
    word = lex_least_square_free_prefix(3, n)
    assert len(word) == n
    assert is_square_free(word)
    first = next(iter(enumerate_square_free(3, n)), None)
    assert word == first if n else word == ""


def test_lex_least_prefix_opening():
    assert lex_least_square_free_prefix(3, 9) == "010201202"
