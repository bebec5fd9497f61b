"""
The verification suite: every end-to-end check, parameterised by how far in n it should go.

Each check returns a :class:`CheckResult`; :func:`run_all` runs them in order and is what
``nctl verify`` prints.
"""
from __future__ import annotations

import dataclasses
import random
import time
from typing import Callable, Optional

from . import reference as ref
from .braid import BraidWord, lift_standard_form
from .coxeter import StandardCoxeterElement, enumerate_std, from_left_set, linear_coxeter
from .fc import enumerate_fc, ij_sets, phi
from .nc import (
    NoncrossingPartition,
    catalan,
    du_sets,
    enumerate_nc,
    enumerate_sequence_pairs,
    involution,
    mn_sets,
)
from .perm import Permutation, bruhat_leq, parse_cycles
from .stdform import (
    count_reduced_subwords,
    cover_relations,
    distinguished_expression,
    extract_positions,
    extract_w,
    fc_subwords,
    standard_form,
    vector_leq,
    vertical_vector,
    vertical_vector_set,
)
from .tables import bijection_table
from .tl import TLElement, TriangularityReport, base_change, check_triangular, multiply_word, omega, reduce_word_oracle


@dataclasses.dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float
    detail: str = ""
    data: dict = dataclasses.field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" - {self.detail}" if self.detail else ""
        return f"[{status}] {self.name} ({self.seconds:.2f}s){extra}"

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "seconds": round(self.seconds, 3), "detail": self.detail}


def _timed(name: str, body: Callable[[], tuple[bool, str, dict]]) -> CheckResult:
    start = time.perf_counter()
    try:
        passed, detail, data = body()
    except AssertionError as exc:
        passed, detail, data = False, f"assertion: {exc}", {}
    return CheckResult(name, passed, time.perf_counter() - start, detail, data)


def _same_perm(size: int, a: str, b: Permutation) -> bool:
    return parse_cycles(size, a) == b


def tables(c_cycle: tuple[int, ...] = ref.TABLE_C) -> CheckResult:
    def body():
        c = StandardCoxeterElement(len(c_cycle) - 1, c_cycle)
        rows = {row.x.perm: row for row in bijection_table(c)}
        size = c.size
        bad = []
        if len(rows) != len(ref.TABLE_ROWS):
            bad.append(f"{len(rows)} rows instead of {len(ref.TABLE_ROWS)}")
        for x, inv, p1, p2, ji, nf, cyc in ref.TABLE_ROWS:
            row = rows.get(parse_cycles(size, x))
            if row is None:
                bad.append(f"missing row {x}")
                continue
            ok = (
                row.inv.perm == parse_cycles(size, inv)
                and (row.psi1.D, row.psi1.U) == p1
                and (row.psi2.D, row.psi2.U) == p2
                and (row.J, row.I) == ji
                and row.phi_normal_form == nf
                and _same_perm(size, cyc, phi(row.x).perm)
            )
            if not ok:
                bad.append(x)
        return not bad, ", ".join(bad) or f"{len(rows)} rows match", {}

    return _timed("bijection tables for c=(1,3,4,2)", body)


def worked_examples() -> CheckResult:
    def body():
        bad = []
        ex = ref.CYCLE_EXAMPLE
        c = StandardCoxeterElement(len(ex["c"]) - 1, ex["c"])
        x = NoncrossingPartition.from_perm(c, parse_cycles(c.size, ex["x"]))
        if str(standard_form(x)) != ex["standard_form"]:
            bad.append("single-cycle standard form")
        if distinguished_expression(c, x.polygons[0].vertices) != ex["distinguished"]:
            bad.append("distinguished expression")

        ex = ref.SMALL_EXAMPLE
        c = StandardCoxeterElement(len(ex["c"]) - 1, ex["c"])
        x = NoncrossingPartition.from_perm(c, parse_cycles(c.size, ex["x"]))
        if str(standard_form(x)) != ex["standard_form"] or vertical_vector(x) != ex["vector"]:
            bad.append("two-cycle standard form / vector")

        ex = ref.BRAID_EXAMPLE
        c = StandardCoxeterElement(len(ex["c"]) - 1, ex["c"])
        x = NoncrossingPartition.from_perm(c, parse_cycles(c.size, ex["x"]))
        if str(lift_standard_form(x)) != ex["lift"]:
            bad.append("lifted standard form")

        ex = ref.EXTRACTION_EXAMPLE
        c = StandardCoxeterElement(len(ex["c"]) - 1, ex["c"])
        x = NoncrossingPartition.from_blocks(c, ex["blocks"])
        w = extract_w(x)
        I, J = ij_sets(w)
        if str(w) != ex["w"] or (set(I), set(J)) != (ex["I"], ex["J"]):
            bad.append("extracted word")

        ex = ref.INVOLUTION_EXAMPLE
        c = StandardCoxeterElement(len(ex["c"]) - 1, ex["c"])
        x = NoncrossingPartition.from_blocks(c, ex["blocks"])
        m, n = mn_sets(x)
        if (set(m), set(n)) != (ex["M"], ex["N"]):
            bad.append("M/N sets")
        return not bad, ", ".join(bad) or "all pins reproduced", {}

    return _timed("worked-example pins", body)


def cardinalities(max_n: int = 6, linear_max_n: int = 7) -> CheckResult:
    def body():
        bad = []
        for n in range(1, max(max_n, linear_max_n) + 1):
            target = catalan(n + 1)
            if len(enumerate_fc(n)) != target or len(enumerate_sequence_pairs(n)) != target:
                bad.append(f"FC/I at n={n}")
            elements = enumerate_std(n) if n <= max_n else [linear_coxeter(n)]
            for c in elements:
                if len(enumerate_nc(c)) != target:
                    bad.append(f"NC at c={c}")
        return not bad, ", ".join(bad) or f"Catalan counts up to n={max(max_n, linear_max_n)}", {}

    return _timed("cardinalities", body)


def _nonlinear(n: int) -> StandardCoxeterElement:
    return from_left_set(n, set(range(2, n + 1, 2)))


def bijection(max_n: int = 5, extra_n: Optional[int] = 6) -> CheckResult:
    def body():
        cases = [c for n in range(1, max_n + 1) for c in enumerate_std(n)]
        if extra_n:
            cases += [linear_coxeter(extra_n), _nonlinear(extra_n)]
        count = 0
        for c in cases:
            images = set()
            for x in enumerate_nc(c):
                w = phi(x)
                if extract_w(x) != w:
                    return False, f"phi != extract_w at c={c}, x={x}", {}
                images.add(w)
                count += 1
            if images != set(enumerate_fc(c.n)):
                return False, f"phi is not onto FC at c={c}", {}
        return True, f"{count} elements over {len(cases)} Coxeter elements", {}

    return _timed("phi equals extracted word", body)


def involution_suite(max_n: int = 5) -> CheckResult:
    def body():
        for n in range(1, max_n + 1):
            cl = linear_coxeter(n)
            top = cl.inverse()
            x_top = NoncrossingPartition.from_perm(top, top.perm)
            expected = Permutation.transposition(n + 1, 1, n + 1)
            if involution(x_top).perm != expected:
                return False, f"inverse linear element not sent to (1,{n + 1})", {}
            for c in enumerate_std(n):
                for x in enumerate_nc(c):
                    y = involution(x)
                    if involution(y) != x:
                        return False, f"not an involution at c={c}, x={x}", {}
                    if c == cl and y != x:
                        return False, f"linear involution moved {x}", {}
                    m, nn = mn_sets(x)
                    pair, image = du_sets(x), du_sets(y)
                    D = (set(pair.D) - m) | nn
                    U = (set(pair.U) - m) | nn
                    if (set(image.D), set(image.U)) != (D, U):
                        return False, f"(D,U) law fails at c={c}, x={x}", {}
                    if {p.initial for p in x.polygons} != {p.initial for p in y.polygons}:
                        return False, f"initial indices moved at c={c}, x={x}", {}
                    if {p.terminal for p in x.polygons} != {p.terminal for p in y.polygons}:
                        return False, f"terminal indices moved at c={c}, x={x}", {}
                    if mn_sets(y) != (nn, m):
                        return False, f"M/N do not swap at c={c}, x={x}", {}
        return True, f"all Coxeter elements up to n={max_n}", {}

    return _timed("involution suite", body)


def lattice_suite(max_n: int = 5) -> CheckResult:
    def body():
        for n in range(1, max_n + 1):
            cl = linear_coxeter(n)
            vectors = vertical_vector_set(cl)
            if len(vectors) != catalan(n + 1):
                return False, f"vertical vectors not distinct at n={n}", {}
            for c in enumerate_std(n):
                if vertical_vector_set(c) != vectors:
                    return False, f"vector set depends on c at c={c}", {}
            for u in vectors:
                for v in vectors:
                    lo = tuple(map(min, u, v))
                    hi = tuple(map(max, u, v))
                    if lo not in vectors or hi not in vectors:
                        return False, f"min/max of {u}, {v} leaves the set", {}
            for a, b in cover_relations(cl):
                if sum(vertical_vector(b)) != sum(vertical_vector(a)) + 1:
                    return False, f"cover {a} < {b} skips a rank", {}
            elems = enumerate_nc(cl)
            for x in elems:
                for y in elems:
                    if vector_leq(vertical_vector(x), vertical_vector(y)) != bruhat_leq(x.perm, y.perm):
                        return False, f"vector order differs from Bruhat order at {x}, {y}", {}
        cl = linear_coxeter(3)
        got_vectors = vertical_vector_set(cl)
        got_covers = {(vertical_vector(a), vertical_vector(b)) for a, b in cover_relations(cl)}
        if got_vectors != set(ref.LATTICE_N3["vectors"]) or got_covers != ref.LATTICE_N3["covers"]:
            return False, "n=3 Hasse diagram differs from the reference", {}
        by_vec = {vertical_vector(x): x for x in enumerate_nc(cl)}
        for vec, word in ref.LATTICE_N3["vectors"].items():
            letters = [int(t[1:]) for t in word.split()] if word != "e" else []
            if Permutation.from_word(4, letters) != by_vec[vec].perm:
                return False, f"label of {vec} differs", {}
        return True, f"lattice checks up to n={max_n}", {}

    return _timed("vertical-vector lattice", body)


def _theorem_cases(max_n_all: int, n_partial: Optional[int]) -> list[StandardCoxeterElement]:
    cases = [c for n in range(1, max_n_all + 1) for c in enumerate_std(n)]
    if n_partial:
        cases += [linear_coxeter(n_partial), _nonlinear(n_partial), linear_coxeter(n_partial).inverse()]
    return cases


def main_theorem(max_n_all: int = 4, n_partial: Optional[int] = 5) -> tuple[CheckResult, list[TriangularityReport]]:
    reports: list[TriangularityReport] = []

    def body():
        for c in _theorem_cases(max_n_all, n_partial):
            reports.append(check_triangular(base_change(c)))
        failed = [str(r.c) for r in reports if not r.triangular]
        detail = f"{len(reports)} matrices triangular" if not failed else "fails for c=" + ", ".join(failed)
        return not failed, detail, {}

    return _timed("triangular base change", body), reports


def sign_pattern(reports: list[TriangularityReport]) -> CheckResult:
    def body():
        failed = [f"{r.c}: {len(r.sign_violations)} entries" for r in reports if not r.sign_pattern]
        if not reports:
            return False, "no base-change matrices were computed", {}
        if failed:
            return False, "sign pattern violated (artifact bug, not a counterexample): " + "; ".join(failed), {}
        return True, f"signs alternate with length in {len(reports)} matrices", {}

    return _timed("sign pattern of base-change entries", body)


def subword_order(max_n: int = 4) -> CheckResult:
    def body():
        count = 0
        for n in range(1, max_n + 1):
            for c in enumerate_std(n):
                preimage = {phi(x): x for x in enumerate_nc(c)}
                for x in enumerate_nc(c):
                    vx = vertical_vector(x)
                    for w in fc_subwords(x):
                        if not vector_leq(vertical_vector(preimage[w]), vx):
                            return False, f"subword {w} of x={x} (c={c}) is not below x", {}
                        count += 1
                    sf = standard_form(x)
                    target = phi(x)
                    picked = [sf.word[p] for p in extract_positions(sf)]
                    if Permutation.from_word(c.size, picked) != target.perm:
                        return False, f"extracted positions do not spell phi(x) at x={x}", {}
                    if count_reduced_subwords(sf.word, target.perm) != 1:
                        return False, f"phi(x) is not a unique subword at x={x}, c={c}", {}
        return True, f"{count} (x, w) pairs up to n={max_n}", {}

    return _timed("subword order and uniqueness", body)


def oracles(
    ns: tuple[int, ...] = (2, 3, 4, 5),
    words_per_n: int = 10_000,
    braid_words: int = 1_000,
    braid_relation_max_n: int = 6,
    seed: int = 0,
) -> CheckResult:
    def body():
        rng = random.Random(seed)
        for n in ns:
            for _ in range(words_per_n):
                word = [rng.randint(1, n) for _ in range(rng.randint(0, 3 * n))]
                if multiply_word(n, word) != reduce_word_oracle(n, word):
                    return False, f"diagram and rewriting disagree on {word} (n={n})", {}
        for _ in range(braid_words):
            n = rng.choice(ns)
            b = BraidWord(n, tuple((rng.randint(1, n), rng.choice((1, -1))) for _ in range(rng.randint(0, 6))))
            if omega(b) * omega(b.inverse()) != TLElement.unit(n):
                return False, f"omega(b) omega(b^-1) != 1 for {b}", {}
        for n in range(2, braid_relation_max_n + 1):
            for i in range(1, n):
                for e in (1, -1):
                    lhs = BraidWord(n, ((i, e), (i + 1, e), (i, e)))
                    rhs = BraidWord(n, ((i + 1, e), (i, e), (i + 1, e)))
                    if omega(lhs) != omega(rhs):
                        return False, f"braid relation fails at n={n}, i={i}", {}
        return True, f"{words_per_n} words per n in {list(ns)}, {braid_words} braid words", {}

    return _timed("oracle equivalence", body)


def run_all(max_n: Optional[int] = None) -> list[CheckResult]:
    """Run every check; ``max_n`` caps the n range of each one."""
    cap = (lambda k: k) if max_n is None else (lambda k: min(k, max_n))
    results = [
        tables(),
        worked_examples(),
        cardinalities(cap(6), cap(7)),
        bijection(cap(5), 6 if max_n is None or max_n >= 6 else None),
        involution_suite(cap(5)),
        lattice_suite(max(3, cap(5))),
    ]
    theorem, reports = main_theorem(cap(4), 5 if max_n is None or max_n >= 5 else None)
    results += [
        theorem,
        subword_order(cap(4)),
        oracles(tuple(n for n in (2, 3, 4, 5) if n <= cap(5)) or (2,), braid_relation_max_n=max(2, cap(6))),
        sign_pattern(reports),
    ]
    return results


__all__ = [
    "CheckResult",
    "bijection",
    "cardinalities",
    "involution_suite",
    "lattice_suite",
    "main_theorem",
    "oracles",
    "run_all",
    "sign_pattern",
    "subword_order",
    "tables",
    "worked_examples",
]
