"""
Permutations of [n+1] = {1, ..., n+1}.

Permutations are stored in one-line notation with 1-based images, so ``Permutation((2, 3, 1))``
sends 1 -> 2, 2 -> 3, 3 -> 1. Composition is right-to-left throughout the package:

    (p * q)(i) = p(q(i))

so the word s_{a_1} s_{a_2} ... s_{a_k} denotes the permutation obtained by applying s_{a_k} first.
"""
from __future__ import annotations

import dataclasses
import functools
from typing import Iterable, Sequence

CycleList = list[tuple[int, ...]]


@dataclasses.dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of [1, {len(images)}]")

    @property
    def size(self) -> int:
        """The ambient size n+1."""
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(image == i for i, image in enumerate(self.images, start=1))

    def cycles(self) -> CycleList:
        return cycle_decomposition(self)

    def __str__(self) -> str:
        return format_cycles(self.cycles())

    def to_json(self) -> dict:
        return {"n": self.size - 1, "images": list(self.images)}

    @classmethod
    def from_json(cls, data: dict) -> Permutation:
        perm = cls(tuple(data["images"]))
        if perm.size != data["n"] + 1:
            raise ValueError(f"ambient size mismatch: n={data['n']} but {perm.size} images")
        return perm

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(1, size + 1)))

    @classmethod
    def from_cycles(cls, size: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """
        Build a permutation from disjoint cycles, each cycle sending an entry to the next one.

        >>> Permutation.from_cycles(4, [(1, 3, 4, 2)]).images
        (3, 1, 4, 2)
        """
        images = list(range(1, size + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for a, b in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
                if a in seen or not 1 <= a <= size:
                    raise ValueError(f"cycles {cycles} are not disjoint cycles on [1, {size}]")
                seen.add(a)
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def transposition(cls, size: int, i: int, j: int) -> Permutation:
        if i == j:
            raise ValueError("a transposition needs two distinct points")
        return cls.from_cycles(size, [(i, j)])

    @classmethod
    def simple(cls, size: int, i: int) -> Permutation:
        """The simple transposition s_i = (i, i+1)."""
        return cls.transposition(size, i, i + 1)

    @classmethod
    def from_word(cls, size: int, word: Iterable[int]) -> Permutation:
        """The product s_{a_1} ... s_{a_k} of simple transpositions (rightmost applied first)."""
        images = list(range(1, size + 1))
        # Right-multiplying by s_a swaps the images at positions a and a+1.
        for a in word:
            if not 1 <= a < size:
                raise ValueError(f"generator index {a} outside [1, {size - 1}]")
            images[a - 1], images[a] = images[a], images[a - 1]
        return cls(tuple(images))


def _check_sizes(p: Permutation, q: Permutation):
    if p.size != q.size:
        raise ValueError(f"size mismatch: S_{p.size} vs S_{q.size}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """
    The composition p∘q, i.e. i -> p(q(i)).

    >>> s1, s2 = Permutation.simple(3, 1), Permutation.simple(3, 2)
    >>> compose(s1, s2).images
    (2, 3, 1)
    """
    _check_sizes(p, q)
    return Permutation(tuple(p.images[image - 1] for image in q.images))


def cycle_decomposition(p: Permutation) -> CycleList:
    """
    Nontrivial cycles of p, each starting at its minimum, sorted by minimum.

    >>> cycle_decomposition(Permutation((2, 1, 4, 3)))
    [(1, 2), (3, 4)]
    """
    cycles = []
    seen = [False] * (p.size + 1)
    for start in range(1, p.size + 1):
        if seen[start] or p(start) == start:
            continue
        cycle = [start]
        seen[start] = True
        i = p(start)
        while i != start:
            cycle.append(i)
            seen[i] = True
            i = p(i)
        cycles.append(tuple(cycle))
    return cycles


def format_cycles(cycles: CycleList) -> str:
    if not cycles:
        return "id"
    return "".join("(" + ",".join(map(str, cycle)) + ")" for cycle in cycles)


def parse_cycles(size: int, text: str) -> Permutation:
    """
    Parse cycle notation such as ``"(1,3)(2,4)"`` or ``"id"``.

    >>> parse_cycles(4, "(3,4,2)").images
    (1, 3, 4, 2)
    """
    text = text.replace(" ", "")
    if text in ("", "id", "e"):
        return Permutation.identity(size)
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"cannot parse cycle notation {text!r}")
    cycles = [tuple(int(a) for a in chunk.split(",")) for chunk in text[1:-1].split(")(")]
    return Permutation.from_cycles(size, cycles)


def support(p: Permutation) -> frozenset[int]:
    """The set of non-fixed points of p."""
    return frozenset(i for i in range(1, p.size + 1) if p(i) != i)


def reflection_length(p: Permutation) -> int:
    """Minimal number of transpositions needed to write p: (n+1) minus the number of orbits."""
    return sum(len(cycle) - 1 for cycle in cycle_decomposition(p))


def absolute_leq(u: Permutation, v: Permutation) -> bool:
    """
    The absolute order: u <= v iff l_T(u) + l_T(u^{-1} v) = l_T(v).

    >>> c = Permutation.from_cycles(4, [(1, 3, 4, 2)])
    >>> absolute_leq(Permutation.transposition(4, 1, 3), c)
    True
    """
    _check_sizes(u, v)
    return reflection_length(u) + reflection_length(u.inverse() * v) == reflection_length(v)


def s_length(p: Permutation) -> int:
    """Coxeter length, i.e. the number of inversions."""
    images = p.images
    return sum(1 for a in range(len(images)) for b in range(a + 1, len(images)) if images[a] > images[b])


def reduced_word(p: Permutation) -> tuple[int, ...]:
    """
    The lexicographically least reduced word, found by repeatedly stripping the smallest left descent.

    >>> reduced_word(Permutation((3, 2, 1)))
    (1, 2, 1)
    """
    images = list(p.images)
    position = [0] * (len(images) + 1)
    for idx, image in enumerate(images, start=1):
        position[image] = idx
    word = []
    while True:
        # s_a is a left descent of w iff w^{-1}(a) > w^{-1}(a+1).
        for a in range(1, len(images)):
            if position[a] > position[a + 1]:
                break
        else:
            return tuple(word)
        word.append(a)
        # Left-multiplying by s_a exchanges the values a and a+1.
        position[a], position[a + 1] = position[a + 1], position[a]


def _dominance_table(p: Permutation) -> list[list[int]]:
    # table[i][k] = #{a <= i : p(a) >= k}
    size = p.size
    table = [[0] * (size + 2) for _ in range(size + 1)]
    for i in range(1, size + 1):
        for k in range(1, size + 2):
            table[i][k] = table[i - 1][k] + (1 if p(i) >= k else 0)
    return table


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """
    Bruhat order via the tableau (dominance) criterion.

    >>> bruhat_leq(Permutation.simple(3, 1), Permutation.from_word(3, [1, 2]))
    True
    >>> bruhat_leq(Permutation.from_word(3, [1, 2]), Permutation.simple(3, 1))
    False
    """
    _check_sizes(u, v)
    tu, tv = _dominance_table(u), _dominance_table(v)
    return all(tu[i][k] <= tv[i][k] for i in range(1, u.size + 1) for k in range(1, u.size + 2))


def reduced_subword_elements(word: Sequence[int], size: int) -> set[Permutation]:
    """
    All permutations having a reduced expression which is a subword of ``word``.

    This is the subword characterisation of Bruhat order when ``word`` is itself reduced, and is
    used to validate :func:`bruhat_leq`.
    """
    states = {Permutation.identity(size)}
    for a in word:
        s = Permutation.simple(size, a)
        states |= {p * s for p in states if s_length(p * s) == s_length(p) + 1}
    return states


@functools.lru_cache(maxsize=None)
def all_permutations(size: int) -> tuple[Permutation, ...]:
    import itertools

    return tuple(Permutation(images) for images in itertools.permutations(range(1, size + 1)))
