"""
Standard Coxeter elements of S_{n+1} and their labelings of the circle.

A standard Coxeter element is an (n+1)-cycle c = (i_1, ..., i_{n+1}) with i_1 = 1 whose entries
increase up to i_k = n+1 and then decrease. Its labels are placed clockwise on a circle; the
right arc carries R_c = {i_1, ..., i_k} and the left arc carries L_c = {i_k, ..., i_{n+1}, i_1}.

Nothing in this package uses coordinates. Every geometric question is answered with the two rank
functions below together with plain integer comparison of labels (label m sits higher than m'
exactly when m < m').
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
from typing import Iterable, Sequence

from .perm import Permutation, cycle_decomposition


@dataclasses.dataclass(frozen=True)
class StandardCoxeterElement:
    n: int
    cycle_seq: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.cycle_seq)
        object.__setattr__(self, "cycle_seq", seq)
        if self.n < 1 or sorted(seq) != list(range(1, self.n + 2)) or seq[0] != 1:
            raise ValueError(f"{seq} is not a cycle on [1, {self.n + 1}] written from 1")
        k = seq.index(self.n + 1)
        if list(seq[: k + 1]) != sorted(seq[: k + 1]) or list(seq[k:]) != sorted(seq[k:], reverse=True):
            raise ValueError(f"cycle {seq} does not increase to {self.n + 1} and then decrease")

    @property
    def size(self) -> int:
        return self.n + 1

    @functools.cached_property
    def top_index(self) -> int:
        """The 1-based index k with i_k = n+1."""
        return self.cycle_seq.index(self.n + 1) + 1

    @functools.cached_property
    def right_set(self) -> frozenset[int]:
        return frozenset(self.cycle_seq[: self.top_index])

    @functools.cached_property
    def left_set(self) -> frozenset[int]:
        return frozenset(self.cycle_seq[self.top_index - 1 :]) | {1}

    @functools.cached_property
    def key(self) -> tuple[int, ...]:
        """Canonical key: the sorted interior labels of the left arc."""
        return tuple(sorted(self.left_set - {1, self.n + 1}))

    @functools.cached_property
    def perm(self) -> Permutation:
        return Permutation.from_cycles(self.size, [self.cycle_seq])

    @functools.cached_property
    def _cw_rank(self) -> dict[int, int]:
        return {m: r for r, m in enumerate(self.cycle_seq, start=1)}

    @functools.cached_property
    def ccw_from_top_seq(self) -> tuple[int, ...]:
        k = self.top_index
        seq = self.cycle_seq
        return tuple(reversed(seq[:k])) + tuple(reversed(seq[k:]))

    @functools.cached_property
    def _ccw_rank(self) -> dict[int, int]:
        return {m: r for r, m in enumerate(self.ccw_from_top_seq, start=1)}

    def clockwise_rank(self, m: int) -> int:
        return self._cw_rank[m]

    def ccw_from_top_rank(self, m: int) -> int:
        return self._ccw_rank[m]

    def inverse(self) -> StandardCoxeterElement:
        return StandardCoxeterElement(self.n, (1,) + tuple(reversed(self.cycle_seq[1:])))

    def is_linear(self) -> bool:
        return self.cycle_seq == tuple(range(1, self.n + 2))

    def word(self) -> tuple[int, ...]:
        """
        A word in the simple generators for c.

        s_{i-1} precedes s_i when i lies on the right arc and follows it when i lies on the left arc.

        >>> from_word(3, [2, 1, 3]).word()
        (2, 1, 3)
        """
        return _least_extension(self.n, self.right_set)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.cycle_seq)) + ")"

    def to_json(self) -> list[int]:
        return list(self.cycle_seq)


def _least_extension(n: int, right_set: frozenset[int]) -> tuple[int, ...]:
    # Precedence: i in R means s_{i-1} before s_i; otherwise s_i before s_{i-1}.
    preds = {i: set() for i in range(1, n + 1)}
    for i in range(2, n + 1):
        if i in right_set:
            preds[i].add(i - 1)
        else:
            preds[i - 1].add(i)
    word: list[int] = []
    placed: set[int] = set()
    while len(word) < n:
        a = min(i for i in range(1, n + 1) if i not in placed and preds[i] <= placed)
        word.append(a)
        placed.add(a)
    return tuple(word)


def linear_coxeter(n: int) -> StandardCoxeterElement:
    if n < 1:
        raise ValueError("n must be at least 1")
    return StandardCoxeterElement(n, tuple(range(1, n + 2)))


def from_left_set(n: int, c1: Iterable[int]) -> StandardCoxeterElement:
    """
    The standard Coxeter element with L_c = c1 ∪ {1, n+1}.

    >>> str(from_left_set(5, {2, 5}))
    '(1,3,4,6,5,2)'
    """
    c1 = set(c1)
    if not c1 <= set(range(2, n + 1)):
        raise ValueError(f"left labels {sorted(c1)} must lie in [2, {n}]")
    right = [m for m in range(1, n + 2) if m not in c1]
    return StandardCoxeterElement(n, tuple(right) + tuple(sorted(c1, reverse=True)))


def enumerate_std(n: int) -> list[StandardCoxeterElement]:
    inner = range(2, n + 1)
    return [
        from_left_set(n, subset)
        for size in range(len(inner) + 1)
        for subset in itertools.combinations(inner, size)
    ]


def is_standard(p: Permutation) -> bool:
    cycles = cycle_decomposition(p)
    if len(cycles) != 1 or len(cycles[0]) != p.size or p.size < 2:
        return False
    try:
        StandardCoxeterElement(p.size - 1, cycles[0])
    except ValueError:
        return False
    return True


def from_permutation(p: Permutation) -> StandardCoxeterElement:
    if not is_standard(p):
        raise ValueError(f"{p} is not a standard Coxeter element")
    return StandardCoxeterElement(p.size - 1, cycle_decomposition(p)[0])


def from_cycle(cycle: Sequence[int]) -> StandardCoxeterElement:
    """Accept the cycle written from any starting point, e.g. ``(3,4,2,1)``."""
    size = len(cycle)
    return from_permutation(Permutation.from_cycles(size, [tuple(cycle)]))


def from_word(n: int, word: Sequence[int]) -> StandardCoxeterElement:
    """
    The product of the simple generators in the order given.

    >>> str(from_word(5, [2, 1, 3, 5, 4]))
    '(1,3,4,6,5,2)'
    """
    if sorted(word) != list(range(1, n + 1)):
        raise ValueError(f"word {list(word)} must use each of s_1..s_{n} exactly once")
    return from_permutation(Permutation.from_word(n + 1, word))


def clockwise_rank(c: StandardCoxeterElement, m: int) -> int:
    return c.clockwise_rank(m)


def ccw_from_top_rank(c: StandardCoxeterElement, m: int) -> int:
    return c.ccw_from_top_rank(m)
