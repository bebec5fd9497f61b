"""
Signed braid words and the lift of standard forms into the braid group.

A transposition (j, i) lifts to s_{i-1}^{e} ... s_{j+1}^{e} s_j s_{j+1}^{-e} ... s_{i-1}^{-e}, with the
sign of s_a equal to +1 when a lies on the left arc of c and -1 when it lies on the right arc.
Braid-group equality is never decided; words are compared through their projections.
"""
from __future__ import annotations

import dataclasses
from typing import Iterable

from .coxeter import StandardCoxeterElement
from .nc import NoncrossingPartition
from .perm import Permutation
from .stdform import standard_form

Letter = tuple[int, int]


@dataclasses.dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[Letter, ...]

    def __post_init__(self):
        letters = tuple((int(a), int(e)) for a, e in self.letters)
        object.__setattr__(self, "letters", letters)
        for a, e in letters:
            if not 1 <= a <= self.n or e not in (1, -1):
                raise ValueError(f"bad braid letter ({a},{e}) for n={self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        if self.n != other.n:
            raise ValueError("braid words on different numbers of strands")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple((a, -e) for a, e in reversed(self.letters)))

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(f"s{a}" if e == 1 else f"s{a}^-1" for a, e in self.letters)

    def to_json(self) -> list[list[int]]:
        return [[a, e] for a, e in self.letters]


def sign(c: StandardCoxeterElement, a: int) -> int:
    return 1 if a in c.left_set else -1


def lift_transposition(c: StandardCoxeterElement, j: int, i: int) -> BraidWord:
    """
    >>> from nctl.coxeter import from_word
    >>> str(lift_transposition(from_word(2, [1, 2]), 1, 3))
    's2^-1 s1 s2'
    """
    if not 1 <= j < i <= c.size:
        raise ValueError(f"({j},{i}) is not a transposition with j < i in S_{c.size}")
    up = [(a, sign(c, a)) for a in range(i - 1, j, -1)]
    down = [(a, -sign(c, a)) for a in range(j + 1, i)]
    return BraidWord(c.n, tuple(up) + ((j, 1),) + tuple(down))


def lift_standard_form(x: NoncrossingPartition) -> BraidWord:
    letters: list[Letter] = []
    for syl in standard_form(x).syllables:
        letters.extend(lift_transposition(x.c, syl.j, syl.i).letters)
    return BraidWord(x.n, tuple(letters))


def project(b: BraidWord) -> Permutation:
    return Permutation.from_word(b.n + 1, [a for a, _ in b.letters])


def free_reduce(b: BraidWord) -> BraidWord:
    stack: list[Letter] = []
    for a, e in b.letters:
        if stack and stack[-1] == (a, -e):
            stack.pop()
        else:
            stack.append((a, e))
    return BraidWord(b.n, tuple(stack))


def from_letters(n: int, letters: Iterable[Letter]) -> BraidWord:
    return BraidWord(n, tuple(letters))
