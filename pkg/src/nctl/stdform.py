"""
Standard forms of noncrossing partitions.

Each cycle of x is written as a product of transpositions between consecutive support points,
each transposition (j, i) is expanded into its palindromic syllable s_{i-1} ... s_j ... s_{i-1},
and the cycles are concatenated in polygon order. Letter counts of the result give the vertical
vector; a distinguished subword of it gives a reduced word of phi(x).
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
from typing import Iterable, Optional, Sequence

from .coxeter import StandardCoxeterElement
from .fc import FullyCommutative, is_321_avoiding, is_fc_word, normal_form
from .nc import NoncrossingPartition, Polygon, enumerate_nc
from .perm import Permutation, s_length

Transposition = tuple[int, int]


@dataclasses.dataclass(frozen=True)
class Syllable:
    j: int
    i: int

    def __post_init__(self):
        if not self.j < self.i:
            raise ValueError(f"syllable needs j < i, got ({self.j},{self.i})")

    @property
    def center(self) -> int:
        return self.j

    @property
    def top(self) -> int:
        return self.i - 1

    @property
    def word(self) -> tuple[int, ...]:
        down = tuple(range(self.i - 1, self.j - 1, -1))
        return down + down[-2::-1]

    @property
    def left_part(self) -> tuple[int, ...]:
        return tuple(range(self.i - 1, self.j, -1))

    @property
    def right_part(self) -> tuple[int, ...]:
        return tuple(range(self.j + 1, self.i))

    def __str__(self) -> str:
        return "(" + " ".join(f"s{a}" for a in self.word) + ")"


def _product(size: int, transpositions: Iterable[Transposition]) -> Permutation:
    p = Permutation.identity(size)
    for a, b in transpositions:
        p = p * Permutation.transposition(size, a, b)
    return p


def distinguished_expression(c: StandardCoxeterElement, cycle: Sequence[int]) -> list[Transposition]:
    """
    Consecutive-support transpositions (d_m, d_{m+1}) multiplying to the given clockwise cycle.

    Relabelling the support d_1 < ... < d_k as 1..k turns the cycle into a standard Coxeter element
    of S_k, so a word for that element read through s_m -> (d_m, d_{m+1}) is the answer. The
    lexicographically smallest such word is returned.

    >>> from nctl.coxeter import StandardCoxeterElement
    >>> c = StandardCoxeterElement(7, (1, 3, 6, 7, 8, 5, 4, 2))
    >>> distinguished_expression(c, (1, 8, 5, 4))
    [(5, 8), (4, 5), (1, 4)]
    """
    support = sorted(cycle)
    if len(support) < 2:
        return []
    relabel = {d: m for m, d in enumerate(support, start=1)}
    clockwise = sorted(support, key=c.clockwise_rank)
    start = clockwise.index(support[0])
    clockwise = clockwise[start:] + clockwise[:start]
    local = StandardCoxeterElement(len(support) - 1, tuple(relabel[d] for d in clockwise))
    return [(support[m - 1], support[m]) for m in local.word()]


def distinguished_expression_search(c: StandardCoxeterElement, cycle: Sequence[int]) -> list[Transposition]:
    """Backtracking oracle: the lexicographically least ordering of the consecutive transpositions."""
    support = sorted(cycle)
    target = Permutation.from_cycles(c.size, [tuple(sorted(support, key=c.clockwise_rank))])
    letters = [(a, b) for a, b in zip(support, support[1:])]
    for ordering in itertools.permutations(letters):
        if _product(c.size, ordering) == target:
            return list(ordering)
    raise AssertionError(f"no distinguished expression for {cycle}")


@dataclasses.dataclass(frozen=True)
class StandardForm:
    x: NoncrossingPartition
    syllables: tuple[Syllable, ...]
    polygon_index: tuple[int, ...]

    @functools.cached_property
    def word(self) -> tuple[int, ...]:
        return tuple(a for syl in self.syllables for a in syl.word)

    @functools.cached_property
    def syllable_of_position(self) -> tuple[int, ...]:
        return tuple(idx for idx, syl in enumerate(self.syllables) for _ in syl.word)

    def centers(self) -> frozenset[int]:
        return frozenset(s.center for s in self.syllables)

    def tops(self) -> frozenset[int]:
        return frozenset(s.top for s in self.syllables)

    def __str__(self) -> str:
        if not self.syllables:
            return "e"
        return "".join(str(s) for s in self.syllables)


def standard_form(x: NoncrossingPartition) -> StandardForm:
    syllables: list[Syllable] = []
    owners: list[int] = []
    for idx, polygon in enumerate(x.polygons):
        for j, i in distinguished_expression(x.c, polygon.vertices):
            syllables.append(Syllable(j, i))
            owners.append(idx)
    return StandardForm(x, tuple(syllables), tuple(owners))


def vertical_vector(x: NoncrossingPartition) -> tuple[int, ...]:
    return _vertical_vector(x)


@functools.lru_cache(maxsize=None)
def _vertical_vector(x: NoncrossingPartition) -> tuple[int, ...]:
    counts = [0] * x.n
    for a in standard_form(x).word:
        counts[a - 1] += 1
    return tuple(counts)


def vector_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(u, v))


def leq_V(x: NoncrossingPartition, y: NoncrossingPartition) -> bool:
    if x.c != y.c:
        raise ValueError("leq_V compares elements for the same Coxeter element")
    return vector_leq(vertical_vector(x), vertical_vector(y))


def vertical_vector_set(c: StandardCoxeterElement) -> set[tuple[int, ...]]:
    return {vertical_vector(x) for x in enumerate_nc(c)}


def linear_extension(c: StandardCoxeterElement) -> list[NoncrossingPartition]:
    def key(x: NoncrossingPartition):
        vec = vertical_vector(x)
        return (sum(vec), vec, x.perm.images)

    return sorted(enumerate_nc(c), key=key)


def cover_relations(c: StandardCoxeterElement) -> list[tuple[NoncrossingPartition, NoncrossingPartition]]:
    """Pairs (x, y) with x <_V y and nothing strictly between, in linear-extension order."""
    elems = linear_extension(c)
    vecs = [vertical_vector(x) for x in elems]
    covers = []
    for b, vb in enumerate(vecs):
        below = [a for a in range(b) if vecs[a] != vb and vector_leq(vecs[a], vb)]
        # Visit from the top down: a is maximal below b iff it lies under no maximal element found so far.
        maximal: list[int] = []
        for a in sorted(below, key=lambda a: -sum(vecs[a])):
            if not any(vector_leq(vecs[a], vecs[m]) for m in maximal):
                maximal.append(a)
        covers.extend((elems[a], elems[b]) for a in sorted(maximal))
    return covers


def extract_positions(sf: StandardForm) -> list[int]:
    """
    Positions in the standard-form word of the letters contributed to w_x^c.

    Every syllable contributes each of its letters once: its center always; any other letter s_a
    from the left part or the right part according to whether a is a center anywhere and on which
    arc a lies.
    """
    c = sf.x.c
    centers = sf.centers()
    positions = []
    offset = 0
    for syl in sf.syllables:
        word = syl.word
        half = len(syl.left_part)
        for pos, a in enumerate(word):
            if pos == half:
                positions.append(offset + pos)
                continue
            from_left = (a in c.left_set) == (a in centers)
            if (pos < half) == from_left:
                positions.append(offset + pos)
        offset += len(word)
    return positions


def extract_word(x: NoncrossingPartition) -> tuple[int, ...]:
    sf = standard_form(x)
    return tuple(sf.word[p] for p in extract_positions(sf))


def extract_w(x: NoncrossingPartition) -> FullyCommutative:
    word = extract_word(x)
    if not is_fc_word(word):
        raise AssertionError(f"extracted word {word} is not a reduced fully commutative word")
    w = normal_form(Permutation.from_word(x.c.size, word))
    if w is None or w.length() != len(word):
        raise AssertionError(f"extracted word {word} is not reduced")
    return w


def fc_subwords(x: NoncrossingPartition) -> set[FullyCommutative]:
    """
    Fully commutative elements having a reduced word that is a subword of the standard form.

    Scans the word left to right keeping every permutation reachable by a reduced fully commutative
    prefix; prefixes of such words are again reduced and fully commutative, so nothing is lost.
    """
    size = x.c.size
    states = {Permutation.identity(size): 0}
    for a in standard_form(x).word:
        s = Permutation.simple(size, a)
        new = {}
        for p, length in states.items():
            q = p * s
            # Right multiplication by s_a raises length iff p(a) < p(a+1).
            if p(a) < p(a + 1) and q not in states and is_321_avoiding(q):
                new[q] = length + 1
        states.update(new)
    return {normal_form(p) for p in states}


def fc_subwords_brute_force(x: NoncrossingPartition) -> set[FullyCommutative]:
    word = standard_form(x).word
    size = x.c.size
    found = set()
    for mask in range(1 << len(word)):
        sub = [a for pos, a in enumerate(word) if mask >> pos & 1]
        if is_fc_word(sub):
            found.add(normal_form(Permutation.from_word(size, sub)))
    return found


def count_reduced_subwords(word: Sequence[int], target: Permutation) -> int:
    """
    Number of position sets in word whose letters form a reduced expression of target.

    Dynamic programme over positions; a state p is kept only while l(p) + l(p^{-1} target) = l(target),
    i.e. while p can still be completed to a reduced word of target.
    """
    goal = s_length(target)
    size = target.size
    counts = {Permutation.identity(size): 1}
    for a in word:
        s = Permutation.simple(size, a)
        new: dict[Permutation, int] = {}
        for p, k in counts.items():
            if p(a) > p(a + 1):
                continue
            q = p * s
            if s_length(q) + s_length(q.inverse() * target) == goal:
                new[q] = new.get(q, 0) + k
        for q, k in new.items():
            counts[q] = counts.get(q, 0) + k
    return counts.get(target, 0)


def reduced_subword_positions(word: Sequence[int], target: Permutation) -> list[tuple[int, ...]]:
    """All position sets in word whose letters form a reduced expression of target (exhaustive)."""
    goal = s_length(target)
    size = target.size
    results = []
    for positions in itertools.combinations(range(len(word)), goal):
        if Permutation.from_word(size, [word[p] for p in positions]) == target:
            results.append(positions)
    return results


def reverse_standard_form_word(x: NoncrossingPartition) -> tuple[int, ...]:
    return tuple(reversed(standard_form(x).word))


def inverse_in(x: NoncrossingPartition, c_inv: Optional[StandardCoxeterElement] = None) -> NoncrossingPartition:
    """x^{-1} viewed as an element below c^{-1}."""
    c_inv = c_inv or x.c.inverse()
    return NoncrossingPartition.from_perm(c_inv, x.perm.inverse())


def polygon_of(sf: StandardForm, idx: int) -> Polygon:
    return sf.x.polygons[sf.polygon_index[idx]]
