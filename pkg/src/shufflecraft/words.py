"""Square-free words over small alphabets.

Words are plain strings of decimal digits: the letter i is the character
str(i), and alphabets never exceed size 5 here.  The empty word counts as
square-free.
"""
from __future__ import annotations

from typing import Iterator, NamedTuple, Optional

__all__ = [
    "SquareOccurrence",
    "check_word",
    "find_square",
    "is_square_free",
    "enumerate_square_free",
    "count_square_free",
    "parikh",
    "is_lyndon",
    "lex_least_square_free_prefix",
]

DIGITS = "0123456789"


class SquareOccurrence(NamedTuple):
    start: int
    half_length: int


def check_word(w: str, alphabet_size: int) -> str:
    """Validate that w uses only letters 0..alphabet_size-1, return w."""
    if not 1 <= alphabet_size <= 10:
        raise ValueError("alphabet_size must be between 1 and 10")
    allowed = DIGITS[:alphabet_size]
    for c in w:
        if c not in allowed:
            raise ValueError(f"letter {c!r} not in alphabet of size {alphabet_size}")
    return w


def _square_start_at_anchor(s: str, q: int, half: int) -> Optional[int]:
    # A square uu with |u| = half whose occurrence straddles position q
    # (a multiple of half) matches b letters backward from q and needs
    # half - b more forward.  Returns the start of such a square, if any.
    b = 0
    while b < half and q - b > 0 and s[q - b - 1] == s[q + half - b - 1]:
        b += 1
    need = half - b
    if s[q:q + need] == s[q + half:q + half + need]:
        return q - b
    return None


def is_square_free(w: str) -> bool:
    """True iff w contains no factor uu with u non-empty."""
    n = len(w)
    for half in range(1, n // 2 + 1):
        for q in range(half, n - half + 1, half):
            if _square_start_at_anchor(w, q, half) is not None:
                return False
    return True


def find_square(w: str) -> Optional[SquareOccurrence]:
    """Earliest square in w, or None.

    Among occurrences the one with minimal start wins; ties go to the
    minimal half length.
    """
    if is_square_free(w):
        return None
    n = len(w)
    for start in range(n - 1):
        for half in range(1, (n - start) // 2 + 1):
            if w[start:start + half] == w[start + half:start + 2 * half]:
                return SquareOccurrence(start, half)
    raise AssertionError("unreachable: detector and scan disagree")


def _extends_square_free(word: list[str]) -> bool:
    # word[:-1] is square-free; any new square must end at the last letter.
    m = len(word)
    for half in range(1, m // 2 + 1):
        if word[m - half:] == word[m - 2 * half:m - half]:
            return False
    return True


def enumerate_square_free(alphabet_size: int, length: int) -> Iterator[str]:
    """Yield all square-free words of exactly this length, lexicographically."""
    if length < 0:
        raise ValueError("length must be non-negative")
    letters = DIGITS[:alphabet_size]
    word: list[str] = []

    def rec() -> Iterator[str]:
        if len(word) == length:
            yield "".join(word)
            return
        for a in letters:
            word.append(a)
            if _extends_square_free(word):
                yield from rec()
            word.pop()

    yield from rec()


def count_square_free(alphabet_size: int, length: int) -> int:
    """Number of square-free words of the given length."""
    letters = DIGITS[:alphabet_size]
    word: list[str] = []

    def rec() -> int:
        if len(word) == length:
            return 1
        total = 0
        for a in letters:
            word.append(a)
            if _extends_square_free(word):
                total += rec()
            word.pop()
        return total

    return rec()


def parikh(w: str, alphabet_size: int) -> tuple[int, ...]:
    """Letter-count vector of w."""
    check_word(w, alphabet_size)
    return tuple(w.count(DIGITS[i]) for i in range(alphabet_size))


def is_lyndon(w: str) -> bool:
    """True iff w is strictly smaller than all of its proper non-empty suffixes."""
    if not w:
        raise ValueError("the empty word is not eligible")
    return all(w < w[i:] for i in range(1, len(w)))


def lex_least_square_free_prefix(alphabet_size: int, n: int) -> str:
    """Lexicographically least square-free word of length n.

    Greedy left-to-right choice with backtracking: every letter is the
    least one that still extends to a square-free word of length n.
    Raises when no square-free word of that length exists.
    """
    for w in enumerate_square_free(alphabet_size, n):
        return w
    raise ValueError(f"no square-free word of length {n} over {alphabet_size} letters")
