"""Fixed-point factorization engine.

Builds, round by round, the minimal expanding letter set ``E`` together with
the minimal left/right cut sets, then reads off an idempotent morphism
``f`` with ``f(w) = w`` whose non-erased letters are exactly ``E``.  The
word is morphically primitive iff ``E`` ends up being the whole alphabet.

Per round the work is linear in the word length: the violation search
touches every position at most once (suffix minima per right-cut segment),
neighborhood computation reads at most ``2n`` positions, fewer than ``2n``
synchronization edges are added, and recompression is a single linear pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .forest import SyncForest
from .words import Neighborhood, PosIndex, Word, build_index, neighborhood


@dataclass(frozen=True)
class Morphism:
    """Letter-to-word map; letters outside ``expanding`` map to the empty word."""

    expanding: frozenset[int]
    images: tuple[tuple[int, ...], ...]

    def apply(self, letters: tuple[int, ...]) -> tuple[int, ...]:
        out: list[int] = []
        for a in letters:
            out.extend(self.images[a])
        return tuple(out)

    def is_identity(self) -> bool:
        return all(img == (a,) for a, img in enumerate(self.images))


@dataclass(frozen=True)
class RoundRecord:
    """What one round of the main loop did."""

    number: int
    letter: int
    neighborhood: Neighborhood
    left_cuts: tuple[int, ...]
    right_cuts: tuple[int, ...]
    scanned: int
    visits: int
    edges: int
    cells: int


@dataclass
class Counters:
    """Work counters accumulated over a whole run."""

    scanned: int = 0
    visits: int = 0
    edges: int = 0
    cells: int = 0
    loop_checks: int = 0

    def total_work(self) -> int:
        return self.scanned + self.visits + self.edges + self.cells


class EngineState:
    """Mutable state of one factorization run; single-threaded use."""

    def __init__(self, word: Word):
        self.word = word
        self.index = build_index(word)
        self.expanding: set[int] = set()
        self.forest = SyncForest(word.n)
        # extremal cuts are always both left and right
        for side in ("L", "R"):
            self.forest.set_flag(0, side)
            self.forest.set_flag(word.n, side)
        self.neighborhoods: dict[int, Neighborhood] = {}
        self.rounds: list[RoundRecord] = []
        self.counters = Counters()
        self.last_scan = 0


def find_violation(state: EngineState) -> int | None:
    """Letter breaking the minimal-frequency condition, or None if stable.

    Walks left cuts in increasing order; for each one only the stretch up
    to the next right cut is inspected.  If every inspected stretch has its
    leftmost least-frequent letter already expanding, no stretch at all can
    violate the condition (a smallest counterexample would have to survive
    narrowing past an already-checked stretch, which is impossible), so a
    None result certifies stability for all left/right cut pairs.

    Per-segment suffix minima make the scan touch each position at most
    once, so one call reads at most ``n`` positions.
    """
    w = state.word
    freq = state.index.count
    left = state.forest.flagged_cuts("L")
    right = state.forest.flagged_cuts("R")
    scanned = 0
    ri = 0
    seg_hi = -1
    seg_best: dict[int, int] = {}
    try:
        for l in left:
            if l >= w.n:
                continue
            while right[ri] <= l:
                ri += 1
            r = right[ri]
            if r != seg_hi:
                # suffix argmin over positions lo+1..r; right-to-left pass
                # keeps ties at the leftmost position
                lo = right[ri - 1]
                seg_best = {}
                arg = r
                for p in range(r, lo, -1):
                    if freq[w.at(p)] <= freq[w.at(arg)]:
                        arg = p
                    seg_best[p] = arg
                    scanned += 1
                seg_hi = r
            k = seg_best[l + 1]
            if w.at(k) not in state.expanding:
                return w.at(k)
        return None
    finally:
        state.last_scan = scanned
        state.counters.scanned += scanned


def expand_letter(state: EngineState, a: int) -> None:
    """Add letter ``a`` to the expanding set and propagate cut flags.

    Every occurrence contributes its delimiting cuts to L/R, its
    neighborhood borders to the opposite sides, and star edges anchored at
    the first occurrence that keep all neighborhoods of ``a`` synchronized.
    """
    if a in state.expanding:
        raise ValueError(f"letter {a} is already expanding")
    occ = state.index.pos[a]
    if not occ:
        raise ValueError(f"letter {a} does not occur in the word")

    nb = state.neighborhoods.get(a)
    if nb is None:
        nb = neighborhood(state.word, state.index, a)
        state.neighborhoods[a] = nb
    forest = state.forest

    for k in occ:
        forest.set_flag(k - 1, "L")
        forest.set_flag(k, "R")
        forest.set_flag(k + nb.right_len, "L")
        forest.set_flag(k - nb.left_len - 1, "R")

    first = occ[0]
    edges = [
        (first + m, k + m)
        for k in occ[1:]
        for m in range(-nb.left_len - 1, nb.right_len + 1)
    ]
    forest.add_edges(edges)
    cells = forest.recompress()

    state.expanding.add(a)
    state.counters.visits += nb.visited
    state.counters.edges += len(edges)
    state.counters.cells += cells
    state.rounds.append(
        RoundRecord(
            number=len(state.rounds) + 1,
            letter=a,
            neighborhood=nb,
            left_cuts=tuple(forest.flagged_cuts("L")),
            right_cuts=tuple(forest.flagged_cuts("R")),
            scanned=state.last_scan,
            visits=nb.visited,
            edges=len(edges),
            cells=cells,
        )
    )


def image(state: EngineState, a: int) -> tuple[int, ...]:
    """Image of expanding letter ``a`` read off the stable cut sets.

    Anchored at the first occurrence ``k``: extend left to the nearest
    right cut, extend right to the furthest right cut not preceded (at a
    strictly smaller offset) by a left cut.  The result is independent of
    which occurrence anchors it.
    """
    if a not in state.expanding:
        raise ValueError(f"letter {a} is not expanding")
    return image_at(state, a, state.index.pos[a][0])


def image_at(state: EngineState, a: int, k: int) -> tuple[int, ...]:
    """Image of expanding letter ``a`` anchored at occurrence position ``k``."""
    forest = state.forest
    i = 0
    while not forest.has_flag(k - i - 1, "R"):
        i += 1
    best_j = 0  # cut k itself is always a right cut for an expanding letter
    j = 0
    while True:
        if forest.has_flag(k + j, "R"):
            best_j = j
        if forest.has_flag(k + j, "L"):
            break
        j += 1
    return state.word.segment(k - i, k + best_j)


@dataclass(frozen=True)
class FactorizationResult:
    """Outcome of a run: verdict, witness morphism and per-round trace."""

    word: Word
    morphism: Morphism
    primitive: bool
    rounds: tuple[RoundRecord, ...]
    left_cuts: tuple[int, ...]
    right_cuts: tuple[int, ...]
    factor_cuts: tuple[int, ...]
    counters: Counters

    @property
    def expanding(self) -> frozenset[int]:
        return self.morphism.expanding

    @property
    def round_count(self) -> int:
        return len(self.rounds)


def prefix_image_lengths(word: Word, f: Morphism) -> list[int]:
    """``|f(w[1..k])|`` for every cut ``k``."""
    lens = [0] * (word.n + 1)
    for k, a in enumerate(word.letters, start=1):
        lens[k] = lens[k - 1] + len(f.images[a])
    return lens


def run(word: Word) -> FactorizationResult:
    """Decide primitivity of ``word`` and build a witness morphism.

    Rounds add one violating letter each until the cut sets are stable;
    non-expanding letters are erased.  The factor cuts are those where the
    image of the prefix has exactly the prefix length; they delimit the
    morphic factorization induced by the returned morphism.
    """
    state = EngineState(word)
    while True:
        state.counters.loop_checks += 1
        a = find_violation(state)
        if a is None:
            break
        expand_letter(state, a)

    images = tuple(
        image(state, a) if a in state.expanding else ()
        for a in range(word.alphabet_size)
    )
    morphism = Morphism(expanding=frozenset(state.expanding), images=images)
    plen = prefix_image_lengths(word, morphism)
    return FactorizationResult(
        word=word,
        morphism=morphism,
        primitive=len(state.expanding) == word.alphabet_size,
        rounds=tuple(state.rounds),
        left_cuts=tuple(state.forest.flagged_cuts("L")),
        right_cuts=tuple(state.forest.flagged_cuts("R")),
        factor_cuts=tuple(k for k in range(word.n + 1) if plen[k] == k),
        counters=state.counters,
    )


def verify(word: Word, f: Morphism) -> bool:
    """True iff ``f`` fixes the word and is idempotent."""
    if f.apply(word.letters) != word.letters:
        return False
    return all(
        f.apply(f.images[a]) == f.images[a] for a in range(word.alphabet_size)
    )


def left_right_cut_check(word: Word, f: Morphism, left: list[int], right: list[int]) -> bool:
    """Check that claimed left/right cuts are left/right cuts of ``f``.

    A cut ``k`` is left if the image of the length-``k`` prefix is at most
    ``k`` long, right if at least ``k`` long.
    """
    plen = prefix_image_lengths(word, f)
    return all(plen[k] <= k for k in left) and all(plen[k] >= k for k in right)
