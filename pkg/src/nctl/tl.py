"""
The Temperley-Lieb algebra TL_n over Z[v, v^{-1}] with its diagram basis {b_w : w fully commutative}.

Diagrams are perfect matchings on 2(n+1) points: top points are 0..n (left to right) and bottom
points are n+1..2n+1 (left to right). In a product a*b the diagram a is drawn above b, and every
closed loop in the middle contributes a factor delta = v + v^{-1}.

The braid generator s_i is sent to v^{-1} - b_i and its inverse to v - b_i. Applying this to lifted
standard forms gives the elements R_x^c, whose expansion in the diagram basis is the base-change
matrix checked for triangularity here.
"""
from __future__ import annotations

import dataclasses
import functools
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .braid import BraidWord, lift_standard_form
from .coxeter import StandardCoxeterElement
from .fc import FullyCommutative, enumerate_fc, normal_form, phi
from .laurent import LaurentPolynomial, is_unit, laurent_add, laurent_mul
from .nc import NoncrossingPartition, catalan
from .perm import Permutation, s_length
from .stdform import linear_extension, vector_leq, vertical_vector

RawPoly = dict[int, int]

__all__ = [
    "LaurentPolynomial",
    "laurent_add",
    "laurent_mul",
    "is_unit",
    "TLDiagram",
    "TLElement",
    "TemperleyLieb",
    "BaseChangeMatrix",
    "TriangularityReport",
    "generator_diagram",
    "diagram_of_fc",
    "multiply_basis",
    "reduce_word_oracle",
    "omega",
    "R",
    "base_change",
    "check_triangular",
    "rank_by_specialisation",
]


@dataclasses.dataclass(frozen=True)
class TLDiagram:
    n: int
    partner: tuple[int, ...]

    def __post_init__(self):
        partner = tuple(self.partner)
        object.__setattr__(self, "partner", partner)
        size = 2 * (self.n + 1)
        if len(partner) != size or any(partner[partner[p]] != p or partner[p] == p for p in range(size)):
            raise ValueError("not a perfect matching")

    @classmethod
    def identity(cls, n: int) -> TLDiagram:
        m = n + 1
        return cls(n, tuple(p + m if p < m else p - m for p in range(2 * m)))

    def is_planar(self) -> bool:
        m = self.n + 1
        # Boundary order: top left-to-right, then bottom right-to-left.
        pos = {p: p for p in range(m)}
        pos.update({m + t: 2 * m - 1 - t for t in range(m)})
        chords = {tuple(sorted((pos[p], pos[q]))) for p, q in enumerate(self.partner)}
        return not any(a < c < b < d for a, b in chords for c, d in chords)

    def __mul__(self, other: TLDiagram) -> tuple[int, TLDiagram]:
        return compose(self, other)


def compose(a: TLDiagram, b: TLDiagram) -> tuple[int, TLDiagram]:
    """Stack a above b; return the number of closed loops and the resulting diagram."""
    if a.n != b.n:
        raise ValueError("diagrams on different numbers of strands")
    m = a.n + 1
    result = [0] * (2 * m)
    seen = [False] * m  # middle points, i.e. a's bottom glued to b's top

    def exit_point(p: int, in_a: bool) -> int:
        while True:
            if in_a:
                q = a.partner[p]
                if q < m:
                    return q
                seen[q - m] = True
                p, in_a = q - m, False
            else:
                q = b.partner[p]
                if q >= m:
                    return q
                seen[q] = True
                p, in_a = m + q, True

    for p in range(m):
        result[p] = exit_point(p, True)
    for p in range(m, 2 * m):
        result[p] = exit_point(p, False)
    loops = 0
    for t in range(m):
        if seen[t]:
            continue
        loops += 1
        s = t
        while not seen[s]:
            seen[s] = True
            u = b.partner[s]
            seen[u] = True
            s = a.partner[m + u] - m
    return loops, TLDiagram(a.n, tuple(result))


def generator_diagram(n: int, i: int) -> TLDiagram:
    """b_i: a cap joining top points i-1, i and a cup joining bottom points i-1, i (0-based)."""
    if not 1 <= i <= n:
        raise ValueError(f"generator b_{i} outside 1..{n}")
    m = n + 1
    partner = list(TLDiagram.identity(n).partner)
    partner[i - 1], partner[i] = i, i - 1
    partner[m + i - 1], partner[m + i] = m + i, m + i - 1
    return TLDiagram(n, tuple(partner))


def word_diagram(n: int, word: Sequence[int]) -> tuple[int, TLDiagram]:
    loops, d = 0, TLDiagram.identity(n)
    for i in word:
        k, d = compose(d, generator_diagram(n, i))
        loops += k
    return loops, d


def diagram_of_fc(w: FullyCommutative) -> TLDiagram:
    loops, d = word_diagram(w.n, w.word)
    if loops:
        raise AssertionError(f"reduced fully commutative word {w} produced a closed loop")
    return d


class TemperleyLieb:
    """Basis bookkeeping for TL_n: FC elements, their diagrams and right multiplication by generators."""

    def __init__(self, n: int):
        self.n = n
        self.basis: tuple[FullyCommutative, ...] = enumerate_fc(n)
        self.index = {w: k for k, w in enumerate(self.basis)}
        self.diagrams = [diagram_of_fc(w) for w in self.basis]
        self.by_diagram = {d: k for k, d in enumerate(self.diagrams)}
        if len(self.by_diagram) != len(self.basis):
            raise AssertionError("distinct fully commutative elements share a diagram")
        self.identity_index = self.index[FullyCommutative.identity(n)]
        self._right: list[list[Optional[tuple[int, int]]]] = [[None] * (n + 1) for _ in self.basis]
        self._products: dict[tuple[int, int], tuple[int, int]] = {}

    def to_fc(self, d: TLDiagram) -> FullyCommutative:
        return self.basis[self.by_diagram[d]]

    def right_generator(self, k: int, i: int) -> tuple[int, int]:
        """(loops, index) for b_{basis[k]} * b_i."""
        entry = self._right[k][i]
        if entry is None:
            loops, d = compose(self.diagrams[k], generator_diagram(self.n, i))
            entry = (loops, self.by_diagram[d])
            self._right[k][i] = entry
        return entry

    def multiply_indices(self, k: int, l: int) -> tuple[int, int]:
        entry = self._products.get((k, l))
        if entry is None:
            loops, d = compose(self.diagrams[k], self.diagrams[l])
            entry = self._products[(k, l)] = (loops, self.by_diagram[d])
        return entry


@functools.lru_cache(maxsize=16)
def tl_algebra(n: int) -> TemperleyLieb:
    return TemperleyLieb(n)


def multiply_basis(w: FullyCommutative, u: FullyCommutative) -> tuple[int, FullyCommutative]:
    """b_w * b_u = delta^loops * b_result."""
    alg = tl_algebra(w.n)
    loops, k = alg.multiply_indices(alg.index[w], alg.index[u])
    return loops, alg.basis[k]


def multiply_word(n: int, word: Sequence[int]) -> tuple[int, FullyCommutative]:
    """Fold the diagram product over a generator word."""
    alg = tl_algebra(n)
    loops, k = 0, alg.identity_index
    for i in word:
        extra, k = alg.right_generator(k, i)
        loops += extra
    return loops, alg.basis[k]


def _rewrite_once(word: list[int]) -> Optional[tuple[int, list[int]]]:
    # Find the violating pair of successive equal letters with the smallest span.
    last: dict[int, int] = {}
    best = None
    for q, a in enumerate(word):
        p = last.get(a)
        if p is not None:
            between = word[p + 1 : q]
            lo, hi = between.count(a - 1), between.count(a + 1)
            if not (lo == 1 and hi == 1) and (best is None or q - p < best[1] - best[0]):
                best = (p, q, lo, hi)
        last[a] = q
    if best is None:
        return None
    p, q, lo, hi = best
    a = word[p]
    if lo + hi == 0:
        # Everything between commutes with a, so a a -> delta a.
        return 1, word[:p] + word[p + 1 : q + 1] + word[q + 1 :]
    if lo + hi == 1:
        r = next(idx for idx in range(p + 1, q) if abs(word[idx] - a) == 1)
        # Slide both a's next to the neighbour, then a (a±1) a -> a.
        return 0, word[:p] + word[p + 1 : r] + [a] + word[r + 1 : q] + word[q + 1 :]
    raise AssertionError("a shortest violating pair has at most one neighbouring letter between")


def reduce_word_oracle(n: int, word: Sequence[int]) -> tuple[int, FullyCommutative]:
    """
    Reduce b_{a_1} ... b_{a_k} to delta^loops * b_w by rewriting the word with the defining relations.

    >>> loops, w = reduce_word_oracle(1, [1, 1, 1])
    >>> loops, str(w)
    (2, '(s1)')
    """
    current = list(word)
    loops = 0
    while True:
        step = _rewrite_once(current)
        if step is None:
            break
        extra, current = step
        loops += extra
    w = normal_form(Permutation.from_word(n + 1, current))
    if w is None or w.length() != len(current):
        raise AssertionError(f"rewriting stopped at {current}, which is not a reduced FC word")
    return loops, w


def _raw_add(target: dict[int, RawPoly], k: int, poly: Mapping[int, int], scale: int = 1, shift: int = 0):
    slot = target.setdefault(k, {})
    for e, coef in poly.items():
        e2 = e + shift
        val = slot.get(e2, 0) + scale * coef
        if val:
            slot[e2] = val
        else:
            slot.pop(e2, None)
    if not slot:
        del target[k]


def _raw_scale_delta(poly: Mapping[int, int], loops: int) -> RawPoly:
    out = dict(poly)
    for _ in range(loops):
        nxt: RawPoly = {}
        for e, coef in out.items():
            nxt[e - 1] = nxt.get(e - 1, 0) + coef
            nxt[e + 1] = nxt.get(e + 1, 0) + coef
        out = {e: c for e, c in nxt.items() if c}
    return out


@dataclasses.dataclass(frozen=True, eq=False)
class TLElement:
    n: int
    terms: Mapping[FullyCommutative, LaurentPolynomial]

    def __post_init__(self):
        object.__setattr__(self, "terms", {w: p for w, p in self.terms.items() if not p.is_zero()})

    @classmethod
    def zero(cls, n: int) -> TLElement:
        return cls(n, {})

    @classmethod
    def unit(cls, n: int) -> TLElement:
        return cls(n, {FullyCommutative.identity(n): LaurentPolynomial.const(1)})

    @classmethod
    def basis_element(cls, w: FullyCommutative) -> TLElement:
        return cls(w.n, {w: LaurentPolynomial.const(1)})

    @classmethod
    def generator(cls, n: int, i: int) -> TLElement:
        return cls.basis_element(normal_form(Permutation.simple(n + 1, i)))

    def coefficient(self, w: FullyCommutative) -> LaurentPolynomial:
        return self.terms.get(w, LaurentPolynomial())

    def support(self) -> set[FullyCommutative]:
        return set(self.terms)

    def __add__(self, other: TLElement) -> TLElement:
        out = dict(self.terms)
        for w, p in other.terms.items():
            out[w] = out.get(w, LaurentPolynomial()) + p
        return TLElement(self.n, out)

    def __neg__(self) -> TLElement:
        return TLElement(self.n, {w: -p for w, p in self.terms.items()})

    def __sub__(self, other: TLElement) -> TLElement:
        return self + (-other)

    def scale(self, poly: LaurentPolynomial) -> TLElement:
        return TLElement(self.n, {w: p * poly for w, p in self.terms.items()})

    def __mul__(self, other: TLElement) -> TLElement:
        if self.n != other.n:
            raise ValueError("elements of different Temperley-Lieb algebras")
        delta = LaurentPolynomial.delta()
        out: dict[FullyCommutative, LaurentPolynomial] = {}
        for w, p in self.terms.items():
            for u, q in other.terms.items():
                loops, r = multiply_basis(w, u)
                out[r] = out.get(r, LaurentPolynomial()) + p * q * delta**loops
        return TLElement(self.n, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, TLElement) and self.n == other.n and self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"[{p}]*b{w}" for w, p in sorted(self.terms.items()))


def omega(b: BraidWord) -> TLElement:
    """Image of a braid word: s_i -> v^{-1} - b_i and s_i^{-1} -> v - b_i, expanded by right multiplication."""
    alg = tl_algebra(b.n)
    current: dict[int, RawPoly] = {alg.identity_index: {0: 1}}
    for i, e in b.letters:
        nxt: dict[int, RawPoly] = {}
        for k, poly in current.items():
            _raw_add(nxt, k, poly, shift=-e)
            loops, k2 = alg.right_generator(k, i)
            _raw_add(nxt, k2, _raw_scale_delta(poly, loops), scale=-1)
        current = nxt
    return TLElement(b.n, {alg.basis[k]: LaurentPolynomial(p) for k, p in current.items()})


def R(x: NoncrossingPartition) -> TLElement:
    return omega(lift_standard_form(x))


@dataclasses.dataclass
class BaseChangeMatrix:
    c: StandardCoxeterElement
    order: list[NoncrossingPartition]
    columns: list[FullyCommutative]
    entries: list[list[LaurentPolynomial]]

    @property
    def size(self) -> int:
        return len(self.order)

    def to_csv_rows(self) -> list[list[str]]:
        header = ["x \\ phi(y)"] + [str(x) for x in self.order]
        rows = [header]
        for x, row in zip(self.order, self.entries):
            rows.append([str(x)] + [str(p) for p in row])
        return rows

    def to_json(self) -> dict:
        return {
            "n": self.c.n,
            "c": list(self.c.cycle_seq),
            "order": [x.to_json()["cycles"] for x in self.order],
            "columns": [w.to_json()["runs"] for w in self.columns],
            "entries": [[p.to_json() for p in row] for row in self.entries],
        }


def base_change(c: StandardCoxeterElement) -> BaseChangeMatrix:
    order = linear_extension(c)
    columns = [phi(y) for y in order]
    col_of = {w: k for k, w in enumerate(columns)}
    if len(col_of) != len(order):
        raise AssertionError("phi is not injective")
    entries = []
    for x in order:
        row = [LaurentPolynomial() for _ in order]
        for w, p in R(x).terms.items():
            row[col_of[w]] = p
        entries.append(row)
    return BaseChangeMatrix(c, order, columns, entries)


def rank_by_specialisation(entries: Sequence[Sequence[LaurentPolynomial]], points: Iterable[int] = (2, 3, 5, 7)) -> int:
    """
    A lower bound for the rank over Q(v): the largest rank over Q of the matrix evaluated at the points.

    Stops early once full rank is reached, which certifies the rank over the fraction field.
    """
    size = len(entries)
    best = 0
    for point in points:
        mat = [[p.evaluate(point) for p in row] for row in entries]
        best = max(best, _rank(mat))
        if best == size:
            break
    return best


def _rank(mat: list[list[Fraction]]) -> int:
    rows = [row[:] for row in mat if any(row)]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col]
            if f:
                factor = f / prow[col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], prow)]
        rank += 1
    return rank


@dataclasses.dataclass
class TriangularityReport:
    n: int
    c: tuple[int, ...]
    size: int
    expected_size: int
    support_violations: list[tuple[str, str]]
    nonunit_diagonal: list[str]
    rank: int
    sign_violations: list[tuple[str, str]]
    diagonal: list[tuple[str, str]]

    @property
    def triangular(self) -> bool:
        return (
            not self.support_violations
            and not self.nonunit_diagonal
            and self.rank == self.expected_size
            and self.size == self.expected_size
        )

    @property
    def sign_pattern(self) -> bool:
        return not self.sign_violations

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "c": list(self.c),
            "size": self.size,
            "expected_size": self.expected_size,
            "rank": self.rank,
            "triangular": self.triangular,
            "sign_pattern": self.sign_pattern,
            "support_violations": [list(v) for v in self.support_violations],
            "nonunit_diagonal": self.nonunit_diagonal,
            "sign_violations": [list(v) for v in self.sign_violations],
            "diagonal": [{"x": x, "entry": p} for x, p in self.diagonal],
        }


def check_triangular(m: BaseChangeMatrix) -> TriangularityReport:
    vecs = [vertical_vector(x) for x in m.order]
    support_bad, sign_bad, nonunit, diagonal = [], [], [], []
    for r, x in enumerate(m.order):
        for s, y in enumerate(m.order):
            entry = m.entries[r][s]
            if entry.is_zero():
                continue
            if not vector_leq(vecs[s], vecs[r]):
                support_bad.append((str(x), str(y)))
            sgn = -1 if s_length(m.columns[s].perm) % 2 else 1
            if any(sgn * coef < 0 for coef in entry.coefficients()):
                sign_bad.append((str(x), str(y)))
        diag = m.entries[r][r]
        diagonal.append((str(x), str(diag)))
        if not diag.is_unit():
            nonunit.append(str(x))
    return TriangularityReport(
        n=m.c.n,
        c=m.c.cycle_seq,
        size=m.size,
        expected_size=catalan(m.c.n + 1),
        support_violations=support_bad,
        nonunit_diagonal=nonunit,
        rank=rank_by_specialisation(m.entries),
        sign_violations=sign_bad,
        diagonal=diagonal,
    )
