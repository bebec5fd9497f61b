"""
Fully commutative (321-avoiding) permutations and their run normal form

    (s_{i_1} s_{i_1 - 1} ... s_{j_1}) (s_{i_2} ... s_{j_2}) ... ,   i_1 < i_2 < ...,  j_1 < j_2 < ...,  j_m <= i_m.

The map g sends a sequence pair (D, U) to the element with J_w = D and I_w + 1 = U; phi = g o psi2.
"""
from __future__ import annotations

import dataclasses
import functools
from typing import Iterable, Optional, Sequence

from .nc import NoncrossingPartition, SequencePair, du_sets, psi2
from .perm import Permutation, reduced_word


@dataclasses.dataclass(frozen=True, order=True)
class FullyCommutative:
    n: int
    runs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        runs = tuple((int(i), int(j)) for i, j in self.runs)
        object.__setattr__(self, "runs", runs)
        for i, j in runs:
            if not 1 <= j <= i <= self.n:
                raise ValueError(f"run ({i},{j}) out of range for n={self.n}")
        for (i0, j0), (i1, j1) in zip(runs, runs[1:]):
            if not (i0 < i1 and j0 < j1):
                raise ValueError(f"runs {runs} are not strictly increasing in both ends")

    @classmethod
    def identity(cls, n: int) -> FullyCommutative:
        return cls(n, ())

    @functools.cached_property
    def word(self) -> tuple[int, ...]:
        return tuple(a for i, j in self.runs for a in range(i, j - 1, -1))

    @functools.cached_property
    def perm(self) -> Permutation:
        return Permutation.from_word(self.n + 1, self.word)

    def length(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        if not self.runs:
            return "e"
        return "".join("(" + " ".join(f"s{a}" for a in range(i, j - 1, -1)) + ")" for i, j in self.runs)

    def to_json(self) -> dict:
        return {"n": self.n, "runs": [list(r) for r in self.runs]}

    @classmethod
    def from_json(cls, data: dict) -> FullyCommutative:
        return cls(data["n"], tuple(tuple(r) for r in data["runs"]))


def is_321_avoiding(p: Permutation) -> bool:
    # No i<j<k with p(i)>p(j)>p(k): track, for each middle entry, the max to its left.
    images = p.images
    best_left = 0
    lefts = []
    for v in images:
        lefts.append(best_left)
        best_left = max(best_left, v)
    min_right = len(images) + 1
    for idx in range(len(images) - 1, -1, -1):
        v = images[idx]
        if lefts[idx] > v > min_right:
            return False
        min_right = min(min_right, v)
    return True


def is_fc_word(word: Sequence[int]) -> bool:
    """
    True iff the word is a reduced expression of a fully commutative element: between two successive
    occurrences of s_i there is exactly one s_{i-1} and exactly one s_{i+1}.

    >>> is_fc_word([2, 1, 3, 2])
    True
    >>> is_fc_word([1, 1])
    False
    """
    positions: dict[int, list[int]] = {}
    for pos, a in enumerate(word):
        positions.setdefault(a, []).append(pos)
    for a, occ in positions.items():
        for p, q in zip(occ, occ[1:]):
            between = word[p + 1 : q]
            if between.count(a - 1) != 1 or between.count(a + 1) != 1:
                return False
    return True


def _split_runs(word: Sequence[int]) -> list[tuple[int, int]]:
    runs: list[list[int]] = []
    for a in word:
        if runs and a == runs[-1][-1] - 1:
            runs[-1].append(a)
        else:
            runs.append([a])
    return [(r[0], r[-1]) for r in runs]


def normal_form(p: Permutation) -> Optional[FullyCommutative]:
    """
    The run normal form of p, or None when p contains the pattern 321.

    >>> str(normal_form(Permutation((1, 4, 2, 3))))
    '(s3 s2)'
    """
    if not is_321_avoiding(p):
        return None
    w = FullyCommutative(p.size - 1, tuple(_split_runs(reduced_word(p))))
    if w.perm != p:
        raise AssertionError(f"normal form {w} does not multiply back to {p}")
    return w


def fc_str(w: FullyCommutative) -> str:
    """Single-run elements print without parentheses, as in the bijection tables."""
    if len(w.runs) == 1:
        return str(w)[1:-1]
    return str(w)


def ij_sets(w: FullyCommutative) -> tuple[frozenset[int], frozenset[int]]:
    """
    I_w = run starts and J_w = run ends, cross-checked against first/last occurrence patterns.
    """
    I = frozenset(i for i, _ in w.runs)
    J = frozenset(j for _, j in w.runs)
    word = w.word
    for i in set(word):
        first = word.index(i)
        last = len(word) - 1 - word[::-1].index(i)
        assert (i in I) == (i + 1 not in word[:first]), (w, i)
        assert (i in J) == (i - 1 not in word[last + 1 :]), (w, i)
    return I, J


def from_sequence_pair(n: int, pair: SequencePair) -> FullyCommutative:
    """
    The map g: runs (u_m - 1, d_m).

    >>> str(from_sequence_pair(3, SequencePair((1, 3), (3, 4))))
    '(s2 s1)(s3)'
    """
    if any(not 1 <= d <= n for d in pair.D) or any(not 2 <= u <= n + 1 for u in pair.U):
        raise ValueError(f"{pair} is not a sequence pair for n={n}")
    return FullyCommutative(n, tuple((u - 1, d) for d, u in zip(pair.D, pair.U)))


def to_sequence_pair(w: FullyCommutative) -> SequencePair:
    return SequencePair(tuple(j for _, j in w.runs), tuple(i + 1 for i, _ in w.runs))


def phi(x: NoncrossingPartition) -> FullyCommutative:
    return from_sequence_pair(x.n, psi2(x))


def n_vector(w: FullyCommutative) -> tuple[int, ...]:
    counts = [0] * w.n
    for a in w.word:
        counts[a - 1] += 1
    return tuple(counts)


@functools.lru_cache(maxsize=16)
def enumerate_fc(n: int) -> tuple[FullyCommutative, ...]:
    """All fully commutative elements of S_{n+1}, built from their run normal forms."""

    def extend(prev_i: int, prev_j: int) -> Iterable[tuple[tuple[int, int], ...]]:
        yield ()
        for i in range(prev_i + 1, n + 1):
            for j in range(prev_j + 1, i + 1):
                for rest in extend(i, j):
                    yield ((i, j),) + rest

    return tuple(sorted(FullyCommutative(n, runs) for runs in extend(0, 0)))


def phi_characterisation(x: NoncrossingPartition) -> tuple[frozenset[int], frozenset[int]]:
    """
    J_{phi(x)} and I_{phi(x)} + 1 computed directly from x, without going through the involution.
    """
    c = x.c
    pair = du_sets(x)
    initials = {p.initial for p in x.polygons}
    terminals = {p.terminal for p in x.polygons}
    nested = {
        k for k in range(1, x.n + 2)
        if k not in x.support and any(p.initial < k < p.terminal for p in x.polygons)
    }
    J = set()
    I_shift = set()
    for k in range(1, x.n + 2):
        if (k in c.right_set and k in pair.D) or (k in c.left_set and (k in initials or k in nested)):
            J.add(k)
        if (k in c.right_set and k in pair.U) or (k in c.left_set and (k in terminals or k in nested)):
            I_shift.add(k)
    return frozenset(J), frozenset(I_shift)


def phi_inverse_table(c) -> dict[FullyCommutative, NoncrossingPartition]:
    from .nc import enumerate_nc

    table = {phi(x): x for x in enumerate_nc(c)}
    return table


__all__ = [
    "FullyCommutative",
    "enumerate_fc",
    "fc_str",
    "from_sequence_pair",
    "ij_sets",
    "is_321_avoiding",
    "is_fc_word",
    "n_vector",
    "normal_form",
    "phi",
    "phi_characterisation",
    "phi_inverse_table",
    "to_sequence_pair",
]
