"""Morphisms, substitutions, and square-freeness certification.

A morphism maps each source letter to one word, a substitution to a finite
set of words.  Certification follows the classical test: a morphism is
square-free as soon as it preserves square-freeness of all short words up
to a bound computed from its image lengths, and a substitution with the
three structural image properties needs only a fixed-length exhaustive
sweep on top.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .words import (
    DIGITS,
    SquareOccurrence,
    check_word,
    enumerate_square_free,
    find_square,
    is_square_free,
)

__all__ = [
    "Morphism",
    "Substitution",
    "Certificate",
    "SearchResult",
    "apply_morphism",
    "apply_substitution",
    "compose",
    "crochemore_bound",
    "certify_square_free_morphism",
    "check_substitution_properties",
    "substitution_test_length",
    "certify_square_free_substitution",
    "fixed_point_prefix",
    "search_uniform_square_free_morphism",
    "parse_morphism",
    "morphism_text",
    "parse_substitution",
    "substitution_text",
]


@dataclass(frozen=True)
class Morphism:
    src_size: int
    dst_size: int
    images: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.src_size:
            raise ValueError("need exactly one image per source letter")
        for img in self.images:
            if not img:
                raise ValueError("images must be nonempty")
            check_word(img, self.dst_size)

    @property
    def max_image_length(self) -> int:
        return max(len(img) for img in self.images)

    @property
    def min_image_length(self) -> int:
        return min(len(img) for img in self.images)

    @property
    def is_uniform(self) -> bool:
        return self.max_image_length == self.min_image_length


@dataclass(frozen=True)
class Substitution:
    src_size: int
    dst_size: int
    image_sets: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        if len(self.image_sets) != self.src_size:
            raise ValueError("need exactly one image set per source letter")
        for images in self.image_sets:
            if not images:
                raise ValueError("image sets must be nonempty")
            for img in images:
                if not img:
                    raise ValueError("images must be nonempty")
                check_word(img, self.dst_size)

    @property
    def max_image_length(self) -> int:
        return max(len(img) for images in self.image_sets for img in images)

    @property
    def min_image_length(self) -> int:
        return min(len(img) for images in self.image_sets for img in images)


@dataclass(frozen=True)
class Certificate:
    """Outcome of a square-freeness certification run."""

    subject: str
    verdict: str  # "certified" | "refuted"
    bound_used: int
    checked_count: int
    counterexample: Optional[tuple[str, SquareOccurrence]] = None

    @property
    def certified(self) -> bool:
        return self.verdict == "certified"


@dataclass(frozen=True)
class SearchResult:
    morphism: Optional[Morphism]
    status: str  # "found" | "exhausted" | "budget"


def apply_morphism(h: Morphism, w: str) -> str:
    check_word(w, h.src_size)
    return "".join(h.images[int(a)] for a in w)


def apply_substitution(s: Substitution, w: str) -> Iterator[str]:
    """All choice-products of images of w, in lexicographic choice order."""
    check_word(w, s.src_size)
    for choice in itertools.product(*(s.image_sets[int(a)] for a in w)):
        yield "".join(choice)


def substitute_with_choices(s: Substitution, w: str, choices: Sequence[int]) -> str:
    """One image of w under s, picking image choices[i] at position i."""
    check_word(w, s.src_size)
    if len(choices) != len(w):
        raise ValueError(f"need {len(w)} image choices, got {len(choices)}")
    return "".join(s.image_sets[int(a)][c] for a, c in zip(w, choices))


def compose(outer: Morphism, inner: Morphism) -> Morphism:
    """The morphism w -> outer(inner(w))."""
    if inner.dst_size > outer.src_size:
        raise ValueError("alphabet mismatch in composition")
    return Morphism(inner.src_size, outer.dst_size,
                    tuple(apply_morphism(outer, img) for img in inner.images))


def crochemore_bound(h: Morphism) -> int:
    """Test-word length max(3, ceil((M-3)/m + 1)) for the morphism test."""
    big, small = h.max_image_length, h.min_image_length
    return max(3, -(-(big - 3) // small) + 1)


def certify_square_free_morphism(h: Morphism, subject: str = "") -> Certificate:
    """Run the preservation test on all square-free words up to the bound.

    Certified means every image of a square-free source word of length at
    most the bound is square-free, which by the classical criterion makes h
    square-free outright.  A refutation carries the first failing source
    word (shortest, then lexicographic) with the square in its image.
    """
    bound = crochemore_bound(h)
    subject = subject or morphism_text(h, sep=", ")
    checked = 0
    for length in range(1, bound + 1):
        for w in enumerate_square_free(h.src_size, length):
            checked += 1
            img = apply_morphism(h, w)
            # Only squares touching both the first and the last image block
            # need a look here: anything else lives inside the image of a
            # proper factor of w, and that factor is square-free, so it was
            # already tested at a shorter length.
            first = len(h.images[int(w[0])])
            last = len(h.images[int(w[-1])])
            if _spanning_square(img, first, last):
                occ = find_square(img)
                assert occ is not None
                return Certificate(subject, "refuted", bound, checked, (w, occ))
    return Certificate(subject, "certified", bound, checked)


def _spanning_square(img: str, first: int, last: int) -> bool:
    # Squares starting inside img[:first] and ending inside img[-last:].
    n = len(img)
    for end in range(max(2, n - last + 1), n + 1):
        shortest = max(1, (end - first + 2) // 2)
        for half in range(shortest, end // 2 + 1):
            start = end - 2 * half
            if img[start] == img[start + half] and img[start:start + half] == img[start + half:end]:
                return True
    return False


def check_substitution_properties(s: Substitution) -> tuple[bool, bool, bool]:
    """The three structural image properties of a substitution.

    (1) no image of a letter sits properly inside an image of a two-letter
    word, (2) no image of a letter is a prefix of an image of a different
    letter, (3) images of distinct letters end with distinct letters.
    """
    letters = range(s.src_size)

    prop1 = True
    for a, b in itertools.product(letters, repeat=2):
        for xa, xb in itertools.product(s.image_sets[a], s.image_sets[b]):
            pair = xa + xb
            for c in letters:
                for xc in s.image_sets[c]:
                    pos = pair.find(xc, 1)
                    while prop1 and pos != -1:
                        if pos + len(xc) <= len(pair) - 1:
                            prop1 = False
                        pos = pair.find(xc, pos + 1)

    prop2 = all(
        not xb.startswith(xa)
        for a, b in itertools.permutations(letters, 2)
        for xa in s.image_sets[a]
        for xb in s.image_sets[b])

    last = [{img[-1] for img in s.image_sets[a]} for a in letters]
    prop3 = all(last[a].isdisjoint(last[b])
                for a, b in itertools.combinations(letters, 2))

    return prop1, prop2, prop3


def substitution_test_length(s: Substitution) -> int:
    """Source-word length whose images catch every short square.

    A square with half length up to 3*M-2 spans at most
    2 + (2*(3*M-2) - 2) // m consecutive images, so it already shows up in
    the image of a square-free word of that length; longer squares are ruled
    out structurally by the three image properties.
    """
    big, small = s.max_image_length, s.min_image_length
    max_half = 3 * big - 2
    return max(3, 2 + (2 * max_half - 2) // small)


def certify_square_free_substitution(
        s: Substitution,
        test_word_length: Optional[int] = None,
        subject: str = "substitution") -> Certificate:
    """Certify a substitution: structural properties plus exhaustive sweep.

    Certified iff properties (1)-(3) hold and every choice-product image of
    every square-free source word of the test length is square-free.  The
    default length comes from substitution_test_length.  Refuted means the
    test failed; when the failure is a concrete square it is attached as
    the counterexample.
    """
    length = substitution_test_length(s) if test_word_length is None else test_word_length
    props_ok = all(check_substitution_properties(s))
    checked = 0
    for w in enumerate_square_free(s.src_size, length):
        checked += 1
        for image in apply_substitution(s, w):
            occ = find_square(image)
            if occ is not None:
                return Certificate(subject, "refuted", length, checked, (w, occ))
    if not props_ok:
        return Certificate(subject, "refuted", length, checked, None)
    return Certificate(subject, "certified", length, checked)


def fixed_point_prefix(h: Morphism, seed: int, n: int) -> str:
    """First n letters of the fixed point obtained by iterating h on seed."""
    if not 0 <= seed < h.src_size:
        raise ValueError("seed letter out of range")
    if h.src_size > h.dst_size:
        raise ValueError("fixed points need images over the source alphabet")
    image = h.images[seed]
    if len(image) < 2 or image[0] != DIGITS[seed]:
        raise ValueError(f"h is not prolongable at letter {seed}")
    w = DIGITS[seed]
    while len(w) < n:
        w = apply_morphism(h, w[:n])
    return w[:n]


def search_uniform_square_free_morphism(
        src_k: int,
        dst_k: int,
        image_length: int,
        budget: Optional[int] = 10 ** 6) -> SearchResult:
    """Backtracking search for a uniform square-free morphism.

    Candidate images are the square-free destination words of the requested
    length, tried in lexicographic order per source letter, with partial
    image tuples pruned by the preservation test on the sub-alphabet placed
    so far.  The first fully certified morphism (lexicographically least
    image tuple) is returned.  The budget caps candidate placements; the
    status tells exhaustion of the search space apart from running out of
    budget.
    """
    candidates = list(enumerate_square_free(dst_k, image_length))
    if not candidates:
        return SearchResult(None, "exhausted")

    # test words over the first j+1 source letters that involve letter j
    test_words: list[list[str]] = []
    for j in range(src_k):
        words = []
        for length in range(1, 4):
            words += [w for w in enumerate_square_free(j + 1, length) if DIGITS[j] in w]
        test_words.append(words)

    images: list[str] = []
    spent = 0

    def placement_ok(j: int) -> bool:
        for w in test_words[j]:
            if not is_square_free("".join(images[int(a)] for a in w)):
                return False
        return True

    def extend() -> Optional[str]:
        nonlocal spent
        if len(images) == src_k:
            return "done"
        j = len(images)
        for cand in candidates:
            if budget is not None and spent >= budget:
                return "budget"
            spent += 1
            images.append(cand)
            if placement_ok(j):
                outcome = extend()
                if outcome is not None:
                    return outcome
            images.pop()
        return None

    outcome = extend()
    if outcome == "budget":
        return SearchResult(None, "budget")
    if outcome is None:
        return SearchResult(None, "exhausted")
    found = Morphism(src_k, dst_k, tuple(images))
    cert = certify_square_free_morphism(found)
    if not cert.certified:  # the incremental pruning already is the full test
        raise AssertionError("search produced an uncertifiable morphism")
    return SearchResult(found, "found")


def parse_morphism(text: str) -> Morphism:
    """Parse lines of the form "a -> image" into a Morphism."""
    images: dict[int, str] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        left, _, right = line.partition("->")
        letter = int(left.strip())
        if letter in images:
            raise ValueError(f"duplicate image for letter {letter}")
        images[letter] = right.strip()
    if sorted(images) != list(range(len(images))):
        raise ValueError("source letters must be 0..k-1 without gaps")
    ordered = tuple(images[a] for a in sorted(images))
    dst = max((int(c) for img in ordered for c in img), default=-1) + 1
    return Morphism(len(ordered), max(dst, 1), ordered)


def morphism_text(h: Morphism, sep: str = "\n") -> str:
    return sep.join(f"{a} -> {img}" for a, img in enumerate(h.images))


def parse_substitution(text: str) -> Substitution:
    """Parse lines of the form "a -> {image1, image2}"."""
    sets: dict[int, tuple[str, ...]] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        left, _, right = line.partition("->")
        letter = int(left.strip())
        right = right.strip()
        if not (right.startswith("{") and right.endswith("}")):
            raise ValueError(f"expected '{{...}}' image set, got {right!r}")
        images = tuple(part.strip() for part in right[1:-1].split(","))
        if letter in sets:
            raise ValueError(f"duplicate image set for letter {letter}")
        sets[letter] = images
    if sorted(sets) != list(range(len(sets))):
        raise ValueError("source letters must be 0..k-1 without gaps")
    ordered = tuple(sets[a] for a in sorted(sets))
    dst = max((int(c) for images in ordered for img in images for c in img),
              default=-1) + 1
    return Substitution(len(ordered), max(dst, 1), ordered)


def substitution_text(s: Substitution, sep: str = "\n") -> str:
    return sep.join(
        "{} -> {{{}}}".format(a, ", ".join(images))
        for a, images in enumerate(s.image_sets))
