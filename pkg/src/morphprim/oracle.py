"""Brute-force oracle for morphic primitivity.

Deliberately naive and fully independent of the engine: it enumerates block
factorizations directly, with no cut sets, no neighborhoods and no
least-frequent-letter machinery, so agreement between the two is meaningful
evidence.  Intended for desk-scale cross-validation only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .engine import Morphism
from .words import Word, intern_word

DEFAULT_SIZE_GUARD = 16

# surface pool for generated/canonical words: 'a'..'z', then tokens x1, x2, ...
def surface_symbol(i: int) -> str:
    if i < 26:
        return chr(ord("a") + i)
    return f"x{i - 25}"


class WordTooLongError(ValueError):
    """Raised when a word exceeds the exhaustive-search size guard."""


def _factorize(word: Word, expanding: frozenset[int]) -> dict[int, tuple[int, ...]] | None:
    """Find block images for ``expanding``, or None.

    Blocks are delimited so that each contains exactly one occurrence of an
    expanding letter; the cut after block ``i`` ranges over the window
    between that occurrence and the next one.  As soon as a letter's block
    is fixed, later blocks of the same letter are forced, which prunes the
    search.
    """
    occ = [p for p in range(1, word.n + 1) if word.at(p) in expanding]
    q = len(occ)
    images: dict[int, tuple[int, ...]] = {}

    def search(i: int, prev_cut: int) -> bool:
        e = word.at(occ[i])
        if i == q - 1:
            block = word.segment(prev_cut + 1, word.n)
            if e in images:
                return images[e] == block
            images[e] = block
            return True
        if e in images:
            c = prev_cut + len(images[e])
            if occ[i] <= c < occ[i + 1] and word.segment(prev_cut + 1, c) == images[e]:
                return search(i + 1, c)
            return False
        for c in range(occ[i], occ[i + 1]):
            images[e] = word.segment(prev_cut + 1, c)
            if search(i + 1, c):
                return True
            del images[e]
        return False

    if search(0, 0):
        return images
    return None


def factorization_exists(word: Word, expanding: frozenset[int] | set[int]) -> bool:
    """True iff ``word`` splits into blocks with one ``expanding`` letter each.

    Equal-letter blocks must coincide, so a factorization is exactly a
    morphism fixing the word whose non-erased letters are ``expanding``.
    """
    expanding = frozenset(expanding)
    if not expanding:
        raise ValueError("expanding set must be nonempty")
    if any(a < 0 or a >= word.alphabet_size for a in expanding):
        raise ValueError("expanding set must be a subset of the alphabet")
    return _factorize(word, expanding) is not None


@dataclass(frozen=True)
class OracleResult:
    """Minimal expanding set found by exhaustive search."""

    size: int
    expanding: frozenset[int]
    proper: bool
    images: dict[int, tuple[int, ...]]

    def morphism(self, word: Word) -> Morphism:
        return Morphism(
            expanding=self.expanding,
            images=tuple(
                self.images.get(a, ()) for a in range(word.alphabet_size)
            ),
        )


def _check_guard(word: Word, max_len: int, force: bool) -> None:
    if word.n > max_len and not force:
        raise WordTooLongError(
            f"word of length {word.n} exceeds the size guard {max_len}; "
            "raise the limit or force the search to override"
        )


def min_expanding(
    word: Word, max_len: int = DEFAULT_SIZE_GUARD, force: bool = False
) -> OracleResult:
    """Smallest expanding set admitting a factorization.

    Subsets are tried in order of increasing size, so the first hit is
    minimal.  The full alphabet always works (single-letter blocks), hence
    the search terminates; ``proper`` tells whether a proper subset won.
    """
    _check_guard(word, max_len, force)
    m = word.alphabet_size
    if m == 0:
        return OracleResult(size=0, expanding=frozenset(), proper=False, images={})
    for size in range(1, m + 1):
        for combo in combinations(range(m), size):
            images = _factorize(word, frozenset(combo))
            if images is not None:
                return OracleResult(
                    size=size,
                    expanding=frozenset(combo),
                    proper=size < m,
                    images=images,
                )
    raise AssertionError("full alphabet must always admit a factorization")


def is_primitive_oracle(
    word: Word, max_len: int = DEFAULT_SIZE_GUARD, force: bool = False
) -> bool:
    """True iff no proper alphabet subset admits a factorization."""
    return not min_expanding(word, max_len=max_len, force=force).proper


def all_words(max_len: int, max_alphabet: int) -> Iterator[Word]:
    """Every word of length 1..max_len, one per isomorphism class.

    Canonical labeling assigns letter ids in order of first appearance, so
    each position may use any letter seen so far or the next fresh one (up
    to ``max_alphabet``).
    """
    def patterns(length: int) -> Iterator[tuple[int, ...]]:
        prefix: list[int] = []

        def rec(used: int) -> Iterator[tuple[int, ...]]:
            if len(prefix) == length:
                yield tuple(prefix)
                return
            for a in range(min(used + 1, max_alphabet)):
                prefix.append(a)
                yield from rec(max(used, a + 1))
                prefix.pop()

        yield from rec(0)

    for length in range(1, max_len + 1):
        for pattern in patterns(length):
            yield intern_word(surface_symbol(a) for a in pattern)
