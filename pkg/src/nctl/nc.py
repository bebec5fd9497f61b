"""
Noncrossing partitions below a standard Coxeter element.

An element x <= c in absolute order is a product of disjoint cycles; each cycle visits its support
in the clockwise order of the c-labeling and the supports (polygons) are pairwise noncrossing.
All predicates here use clockwise ranks and integer comparisons only.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
from typing import Iterable, Sequence

from .coxeter import StandardCoxeterElement
from .perm import Permutation, absolute_leq, cycle_decomposition, support


@dataclasses.dataclass(frozen=True, order=True)
class Polygon:
    vertices: tuple[int, ...]

    def __post_init__(self):
        vertices = tuple(self.vertices)
        object.__setattr__(self, "vertices", vertices)
        if len(vertices) < 2 or any(a >= b for a, b in zip(vertices, vertices[1:])):
            raise ValueError(f"polygon vertices {vertices} must be strictly increasing, at least two")

    @property
    def initial(self) -> int:
        return self.vertices[0]

    @property
    def terminal(self) -> int:
        return self.vertices[-1]

    def __contains__(self, label: int) -> bool:
        return label in self.vertices

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.vertices)) + "}"


@dataclasses.dataclass(frozen=True)
class SequencePair:
    D: tuple[int, ...]
    U: tuple[int, ...]

    def __post_init__(self):
        D, U = tuple(self.D), tuple(self.U)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "U", U)
        increasing = all(a < b for a, b in zip(D, D[1:])) and all(a < b for a, b in zip(U, U[1:]))
        if len(D) != len(U) or not increasing or any(d >= u for d, u in zip(D, U)):
            raise ValueError(f"({D}, {U}) is not a pair of increasing sequences with d_i < u_i")

    def __str__(self) -> str:
        return f"({_fmt_set(self.D)},{_fmt_set(self.U)})"

    def to_json(self) -> dict:
        return {"D": list(self.D), "U": list(self.U)}


def _fmt_set(values: Iterable[int]) -> str:
    values = sorted(values)
    return "{" + ",".join(map(str, values)) + "}" if values else "∅"


def _blocks_noncrossing(c: StandardCoxeterElement, a: Sequence[int], b: Sequence[int]) -> bool:
    # b must sit inside a single arc cut out by consecutive vertices of a.
    ranks = sorted(c.clockwise_rank(m) for m in a)

    def gap(m: int) -> int:
        r = c.clockwise_rank(m)
        return sum(1 for s in ranks if s < r) % len(ranks)

    return len({gap(m) for m in b}) <= 1


@dataclasses.dataclass(frozen=True)
class NoncrossingPartition:
    """
    An element x of NC(S_{n+1}, c) together with its polygons in counterclockwise-from-the-top order.

    Construct with :meth:`from_perm` or :meth:`from_blocks`; both validate.
    """

    c: StandardCoxeterElement
    perm: Permutation
    polygons: tuple[Polygon, ...]

    @classmethod
    def from_perm(cls, c: StandardCoxeterElement, perm: Permutation) -> NoncrossingPartition:
        if perm.size != c.size:
            raise ValueError("permutation and Coxeter element live in different groups")
        blocks = [cycle for cycle in cycle_decomposition(perm)]
        x = cls.from_blocks(c, blocks)
        if x.perm != perm:
            raise ValueError(f"{perm} does not visit its blocks clockwise for c={c}")
        return x

    @classmethod
    def from_blocks(cls, c: StandardCoxeterElement, blocks: Iterable[Iterable[int]]) -> NoncrossingPartition:
        """Orient each block (of size >= 2) clockwise and validate the noncrossing condition."""
        blocks = [sorted(set(b), key=c.clockwise_rank) for b in blocks]
        blocks = [b for b in blocks if len(b) >= 2]
        seen: set[int] = set()
        for b in blocks:
            if seen & set(b):
                raise ValueError("blocks are not disjoint")
            seen |= set(b)
        for a, b in itertools.combinations(blocks, 2):
            if not _blocks_noncrossing(c, a, b):
                raise ValueError(f"blocks {a} and {b} cross for c={c}")
        perm = Permutation.from_cycles(c.size, blocks)
        polys = sorted((Polygon(tuple(sorted(b))) for b in blocks), key=lambda p: c.ccw_from_top_rank(p.initial))
        return cls(c, perm, tuple(polys))

    @property
    def n(self) -> int:
        return self.c.n

    @functools.cached_property
    def support(self) -> frozenset[int]:
        return support(self.perm)

    def __str__(self) -> str:
        return str(self.perm)

    def to_json(self) -> dict:
        return {"n": self.n, "c": list(self.c.cycle_seq), "cycles": [list(cy) for cy in self.perm.cycles()]}

    @classmethod
    def from_json(cls, data: dict) -> NoncrossingPartition:
        c = StandardCoxeterElement(data["n"], tuple(data["c"]))
        return cls.from_perm(c, Permutation.from_cycles(c.size, [tuple(cy) for cy in data["cycles"]]))


def _nc_set_partitions(seq: tuple[int, ...]) -> list[list[list[int]]]:
    # Noncrossing set partitions of a cyclically ordered sequence, blocks listed in sequence order.
    if not seq:
        return [[]]
    head, results = seq[0], []
    for rest in _nc_set_partitions(seq[1:]):
        results.append([[head]] + rest)
    for j in range(1, len(seq)):
        for inner in _nc_set_partitions(seq[1:j]):
            for outer in _nc_set_partitions(seq[j:]):
                # outer[0] is the block of seq[j]; head joins it.
                results.append([[head] + outer[0]] + outer[1:] + inner)
    return results


def enumerate_nc(c: StandardCoxeterElement) -> list[NoncrossingPartition]:
    """All elements of NC(S_{n+1}, c), generated as noncrossing set partitions of the c-labeling."""
    return list(_enumerate_nc(c))


@functools.lru_cache(maxsize=64)
def _enumerate_nc(c: StandardCoxeterElement) -> tuple[NoncrossingPartition, ...]:
    out = []
    for blocks in _nc_set_partitions(c.cycle_seq):
        cycles = [tuple(b) for b in blocks if len(b) >= 2]
        perm = Permutation.from_cycles(c.size, cycles)
        polys = sorted((Polygon(tuple(sorted(b))) for b in cycles), key=lambda p: c.ccw_from_top_rank(p.initial))
        out.append(NoncrossingPartition(c, perm, tuple(polys)))
    return tuple(sorted(out, key=lambda x: x.perm.images))


def nc_by_brute_force(c: StandardCoxeterElement) -> set[Permutation]:
    """The absolute-order ideal below c, by scanning the whole group."""
    from .perm import all_permutations

    return {p for p in all_permutations(c.size) if absolute_leq(p, c.perm)}


def polygons(x: NoncrossingPartition) -> list[Polygon]:
    return list(x.polygons)


def du_sets(x: NoncrossingPartition) -> SequencePair:
    """
    D = support minus terminal vertices, U = support minus initial vertices.
    """
    terminals = {p.terminal for p in x.polygons}
    initials = {p.initial for p in x.polygons}
    return SequencePair(tuple(sorted(x.support - terminals)), tuple(sorted(x.support - initials)))


def is_nested(x: NoncrossingPartition, label: int, polygon: Polygon) -> bool:
    return label not in polygon and polygon.initial < label < polygon.terminal


def mn_sets(x: NoncrossingPartition) -> tuple[frozenset[int], frozenset[int]]:
    pair = du_sets(x)
    left = x.c.left_set
    m = frozenset(pair.D) & frozenset(pair.U) & left
    n = frozenset(
        k for k in left if k not in x.support and any(is_nested(x, k, p) for p in x.polygons)
    )
    return m, n


def _crossing_chord(c: StandardCoxeterElement, polygon: Polygon, k: int) -> tuple[int, int]:
    # The clockwise-consecutive pair (a, b) of the polygon passing from above k to below k.
    cyc = sorted(polygon.vertices, key=c.clockwise_rank)
    pairs = [(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]) if a > k > b]
    if len(pairs) != 1:
        raise AssertionError(f"polygon {polygon} should cross height {k} exactly once going down")
    return pairs[0]


def leftmost_enlargeable(x: NoncrossingPartition, k: int) -> Polygon:
    """
    The polygon nesting k whose descending chord at height k is nearest to k on the left arc.

    That chord cuts off the shortest clockwise arc containing k, which is the same as being the
    first chord met when moving right from k.
    """
    _, n_set = mn_sets(x)
    if k not in n_set:
        raise ValueError(f"{k} is not a left label nested in x without being a vertex")
    c = x.c

    def arc(p: Polygon) -> int:
        a, b = _crossing_chord(c, p, k)
        return (c.clockwise_rank(b) - c.clockwise_rank(a)) % c.size

    return min((p for p in x.polygons if is_nested(x, k, p)), key=arc)


def _blocks(x: NoncrossingPartition) -> list[set[int]]:
    return [set(p.vertices) for p in x.polygons]


def involution(x: NoncrossingPartition) -> NoncrossingPartition:
    """
    Insert every label of N into its leftmost enlargeable polygon, then delete every label of M.

    Targets are all chosen in x itself; the result does not depend on insertion order.
    """
    m_set, n_set = mn_sets(x)
    targets = {k: leftmost_enlargeable(x, k) for k in n_set}
    blocks = {p: set(p.vertices) for p in x.polygons}
    for k, p in targets.items():
        blocks[p].add(k)
    for b in blocks.values():
        b -= m_set
    return NoncrossingPartition.from_blocks(x.c, blocks.values())


def psi1(x: NoncrossingPartition) -> SequencePair:
    return du_sets(x)


def psi2(x: NoncrossingPartition) -> SequencePair:
    return du_sets(involution(x))


def enumerate_sequence_pairs(n: int) -> list[SequencePair]:
    """All pairs of equal-length increasing sequences in [n+1] with d_i < u_i."""
    labels = range(1, n + 2)
    out = []
    for k in range(0, n + 1):
        for d in itertools.combinations(labels, k):
            for u in itertools.combinations(labels, k):
                if all(a < b for a, b in zip(d, u)):
                    out.append(SequencePair(d, u))
    return out


def catalan(m: int) -> int:
    from math import comb

    return comb(2 * m, m) // (m + 1)
