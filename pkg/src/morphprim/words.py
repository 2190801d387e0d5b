"""Word representation, occurrence indexing, neighborhoods and the naive
least-frequent-letter lookup.

Conventions used throughout the package: letters are dense 0-based ids,
positions in a word are 1-based (``w[1] .. w[n]``), and cuts are 0-based
borders between letters (cut ``k`` follows the prefix of length ``k``, so a
word of length ``n`` has cuts ``0 .. n``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class Word:
    """An interned word over a compact alphabet.

    ``letters[i]`` is the letter id at 1-based position ``i + 1``;
    ``symbols[a]`` is the surface form of letter id ``a``. Every id below
    ``alphabet_size`` occurs in ``letters``, i.e. the alphabet is exactly
    the set of letters occurring in the word.
    """

    letters: tuple[int, ...]
    symbols: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def alphabet_size(self) -> int:
        return len(self.symbols)

    def at(self, p: int) -> int:
        """Letter id at 1-based position ``p``."""
        if not 1 <= p <= self.n:
            raise IndexError(f"position {p} out of range 1..{self.n}")
        return self.letters[p - 1]

    def segment(self, i: int, j: int) -> tuple[int, ...]:
        """Letter ids at positions ``i .. j`` inclusive (empty if ``i > j``)."""
        return self.letters[i - 1 : j]

    def render(self, letters: Iterable[int] | None = None) -> str:
        """Surface form of ``letters`` (the whole word by default).

        Single-character alphabets are concatenated; alphabets containing a
        multi-character symbol are joined with spaces.
        """
        ids = self.letters if letters is None else tuple(letters)
        sep = " " if any(len(s) > 1 for s in self.symbols) else ""
        return sep.join(self.symbols[a] for a in ids)


def intern_word(symbols: Iterable[str]) -> Word:
    """Intern a sequence of surface symbols into a :class:`Word`.

    Letter ids are assigned in order of first appearance, so the result
    round-trips to the original symbols via ``symbols``.
    """
    ids: dict[str, int] = {}
    letters = []
    for s in symbols:
        if s not in ids:
            ids[s] = len(ids)
        letters.append(ids[s])
    return Word(letters=tuple(letters), symbols=tuple(ids))


@dataclass(frozen=True)
class PosIndex:
    """Per-letter occurrence counts and 1-based occurrence positions.

    ``pos[a][i]`` is the position of the ``i + 1``-th occurrence of letter
    ``a``; ``count[a] == len(pos[a])`` and counts sum to the word length.
    """

    count: tuple[int, ...]
    pos: tuple[tuple[int, ...], ...]


def build_index(w: Word) -> PosIndex:
    """Build the occurrence index in one left-to-right pass."""
    occ: list[list[int]] = [[] for _ in range(w.alphabet_size)]
    for p, a in enumerate(w.letters, start=1):
        occ[a].append(p)
    return PosIndex(
        count=tuple(len(o) for o in occ),
        pos=tuple(tuple(o) for o in occ),
    )


@dataclass(frozen=True)
class Neighborhood:
    """Maximal common context of all occurrences of one letter.

    ``left_len`` and ``right_len`` are the lengths of the longest extensions
    to the left and right on which all occurrences agree without crossing a
    word boundary.  ``visited`` counts the positions read while computing
    them (it is at most ``2n``: left parts of distinct occurrences are
    disjoint, and so are right parts).
    """

    left_len: int
    right_len: int
    visited: int = 0


def neighborhood(w: Word, idx: PosIndex, a: int) -> Neighborhood:
    """Compute the neighborhood of letter ``a`` in ``w``.

    A letter with a single occurrence extends to both word boundaries.
    """
    if not 0 <= a < w.alphabet_size or idx.count[a] == 0:
        raise ValueError(f"letter {a} does not occur in the word")
    occ = idx.pos[a]
    n = w.n
    visited = 0

    right = 0
    while True:
        k = right + 1
        if occ[0] + k > n:
            break
        visited += 1
        first = w.at(occ[0] + k)
        ok = True
        for p in occ[1:]:
            if p + k > n:
                ok = False
                break
            visited += 1
            if w.at(p + k) != first:
                ok = False
                break
        if not ok:
            break
        right = k

    left = 0
    while True:
        k = left + 1
        if occ[0] - k < 1:
            break
        visited += 1
        first = w.at(occ[0] - k)
        ok = True
        for p in occ[1:]:
            if p - k < 1:
                ok = False
                break
            visited += 1
            if w.at(p - k) != first:
                ok = False
                break
        if not ok:
            break
        left = k

    return Neighborhood(left_len=left, right_len=right, visited=visited)


def alpha_naive(w: Word, idx: PosIndex, i: int, j: int) -> int:
    """Leftmost position in ``(i, j]`` of a letter with minimal frequency.

    Frequency is measured in the whole word, not in the factor; ties break
    to the leftmost position.  This is the reference implementation used to
    cross-check the amortized segment scan in the engine.
    """
    if not 0 <= i < j <= w.n:
        raise ValueError(f"invalid cut interval ({i}, {j}] for length {w.n}")
    best = i + 1
    best_freq = idx.count[w.at(best)]
    for k in range(i + 2, j + 1):
        f = idx.count[w.at(k)]
        if f < best_freq:
            best, best_freq = k, f
    return best
