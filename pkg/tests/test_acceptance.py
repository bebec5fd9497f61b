"""One test per acceptance criterion, each timed against its runtime bound."""
import json
import time

import pytest

from nctl import braid, cli, verify
from nctl import reference as ref
from nctl.coxeter import StandardCoxeterElement, enumerate_std, from_left_set, linear_coxeter
from nctl.nc import NoncrossingPartition
from nctl.perm import Permutation, parse_cycles
from nctl.tl import base_change, check_triangular


@pytest.fixture(scope="module")
def theorem_run():
    return verify.main_theorem(max_n_all=4, n_partial=5)


def _check(record, number, name, result, bound):
    record(number, name, result.passed, result.seconds, bound, result.detail)
    assert result.passed, result.detail
    assert result.seconds < bound, f"{result.seconds:.1f}s exceeds {bound}s"


def test_criterion_01_tables(record_criterion, capsys):
    start = time.perf_counter()
    assert cli.main(["tables", "--cycle", "1,3,4,2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    c = StandardCoxeterElement(3, ref.TABLE_C)
    size = c.size
    by_x = {}
    for row in data["rows"]:
        perm = NoncrossingPartition.from_perm(c, _perm_of(size, row["x"])).perm
        by_x[perm] = row
    mismatches = []
    for x, inv, p1, p2, ji, nf, cyc in ref.TABLE_ROWS:
        row = by_x.get(parse_cycles(size, x))
        if row is None:
            mismatches.append(f"missing {x}")
            continue
        ok = (
            _perm_of(size, row["inv"]) == parse_cycles(size, inv)
            and (tuple(row["psi1"]["D"]), tuple(row["psi1"]["U"])) == p1
            and (tuple(row["psi2"]["D"]), tuple(row["psi2"]["U"])) == p2
            and (tuple(row["J"]), tuple(row["I"])) == ji
            and row["phi_normal_form"] == nf
            and _perm_of(size, row["phi_cycles"]) == parse_cycles(size, cyc)
        )
        if not ok:
            mismatches.append(x)
    seconds = time.perf_counter() - start
    passed = len(data["rows"]) == 14 and not mismatches
    record_criterion(1, "table reproduction for c=(1,3,4,2)", passed, seconds, 1.0, ", ".join(mismatches))
    assert passed, mismatches
    assert seconds < 1.0
    assert verify.tables().passed


def _perm_of(size, cycles):
    return Permutation.from_cycles(size, [tuple(cy) for cy in cycles])


def test_criterion_02_worked_examples(record_criterion):
    _check(record_criterion, 2, "worked-example pins", verify.worked_examples(), 1.0)


def test_criterion_03_cardinalities(record_criterion):
    _check(record_criterion, 3, "Catalan cardinalities", verify.cardinalities(6, 7), 30.0)


def test_criterion_04_bijection(record_criterion):
    _check(record_criterion, 4, "phi equals extracted word", verify.bijection(5, 6), 120.0)


def test_criterion_05_involution(record_criterion):
    _check(record_criterion, 5, "involution suite", verify.involution_suite(5), 60.0)


def test_criterion_06_lattice(record_criterion):
    _check(record_criterion, 6, "vertical-vector lattice", verify.lattice_suite(5), 60.0)


def test_criterion_07_main_theorem(record_criterion, theorem_run):
    result, reports = theorem_run
    assert len(reports) == sum(len(enumerate_std(n)) for n in range(1, 5)) + 3
    assert sum(1 for r in reports if r.n == 5 and r.c != linear_coxeter(5).cycle_seq) == 2
    _check(record_criterion, 7, "triangular base change", result, 300.0)


def test_criterion_08_subword_order(record_criterion):
    _check(record_criterion, 8, "subword order and uniqueness", verify.subword_order(4), 120.0)


def test_criterion_09_oracles(record_criterion):
    _check(record_criterion, 9, "oracle equivalence", verify.oracles(), 120.0)


def test_criterion_10_sign_pattern(record_criterion, theorem_run):
    _, reports = theorem_run
    _check(record_criterion, 10, "sign pattern of entries", verify.sign_pattern(reports), 1.0)


@pytest.mark.parametrize("forced", [1, -1])
def test_sign_rule_mutation_is_detected(monkeypatch, forced):
    # A single sign for every lifted letter keeps the matrix triangular but breaks the sign pattern.
    monkeypatch.setattr(braid, "sign", lambda c, a: forced)
    report = check_triangular(base_change(from_left_set(3, {2})))
    assert report.triangular
    assert not report.sign_pattern
    assert verify.sign_pattern([report]).passed is False


def test_cli_verify_exit_code_tracks_failures(monkeypatch, capsys):
    monkeypatch.setattr(braid, "sign", lambda c, a: 1)
    assert cli.main(["basechange", "--n", "3", "--word", "2,1,3"]) == 1
    assert "sign pattern: NO" in capsys.readouterr().out
