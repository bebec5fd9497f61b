import pytest

from nctl.braid import BraidWord
from nctl.coxeter import enumerate_std, from_left_set, linear_coxeter
from nctl.fc import enumerate_fc
from nctl.laurent import LaurentPolynomial
from nctl.nc import catalan
from nctl.stdform import vector_leq, vertical_vector
from nctl.tl import (
    TLDiagram,
    TLElement,
    TemperleyLieb,
    base_change,
    check_triangular,
    compose,
    diagram_of_fc,
    generator_diagram,
    multiply_word,
    omega,
    rank_by_specialisation,
    reduce_word_oracle,
)

DELTA = LaurentPolynomial.delta()


@pytest.mark.parametrize("n", range(1, 6))
def test_diagram_basis_is_catalan_and_planar(n):
    alg = TemperleyLieb(n)
    assert len(alg.basis) == catalan(n + 1)
    diagrams = {diagram_of_fc(w) for w in enumerate_fc(n)}
    assert len(diagrams) == catalan(n + 1)
    assert all(d.is_planar() for d in diagrams)


def test_generator_relations():
    n = 4
    for i in range(1, n + 1):
        loops, d = compose(generator_diagram(n, i), generator_diagram(n, i))
        assert (loops, d) == (1, generator_diagram(n, i))
    for i in range(1, n):
        e, f = generator_diagram(n, i), generator_diagram(n, i + 1)
        loops, efe = compose(compose(e, f)[1], e)
        assert (loops, efe) == (0, e)
    loops, d = compose(generator_diagram(n, 1), generator_diagram(n, 3))
    assert loops == 0 and d == compose(generator_diagram(n, 3), generator_diagram(n, 1))[1]
    assert compose(TLDiagram.identity(n), generator_diagram(n, 2)) == (0, generator_diagram(n, 2))


def test_multiplication_matches_rewriting():
    import random

    rng = random.Random(1)
    for n in (2, 3, 4):
        for _ in range(300):
            word = [rng.randint(1, n) for _ in range(rng.randint(0, 8))]
            assert multiply_word(n, word) == reduce_word_oracle(n, word)


def test_omega_of_generators():
    v = LaurentPolynomial.v()
    b = TLElement.generator(2, 1)
    assert omega(BraidWord(2, ((1, 1),))) == TLElement.unit(2).scale(v ** -1) - b
    assert omega(BraidWord(2, ((1, -1),))) == TLElement.unit(2).scale(v) - b
    assert omega(BraidWord(2, ((1, 1), (1, -1)))) == TLElement.unit(2)
    assert b * b == b.scale(DELTA)


@pytest.mark.parametrize("n", range(1, 4))
def test_base_change_is_triangular_for_every_c(n):
    for c in enumerate_std(n):
        report = check_triangular(base_change(c))
        assert report.triangular and report.sign_pattern
        assert report.rank == catalan(n + 1)


def test_matrix_support_below_diagonal():
    m = base_change(from_left_set(4, {2, 4}))
    vecs = [vertical_vector(x) for x in m.order]
    for r in range(m.size):
        for s in range(m.size):
            if not m.entries[r][s].is_zero():
                assert vector_leq(vecs[s], vecs[r])
        assert m.entries[r][r].is_unit()


def test_rank_detects_singular_matrices():
    one, zero = LaurentPolynomial.const(1), LaurentPolynomial()
    assert rank_by_specialisation([[one, DELTA], [one, DELTA]]) == 1
    assert rank_by_specialisation([[one, zero], [zero, DELTA]]) == 2


def test_report_flags_a_broken_matrix():
    m = base_change(linear_coxeter(2))
    m.entries[0][-1] = LaurentPolynomial.const(1)
    m.entries[1][1] = DELTA
    report = check_triangular(m)
    assert report.support_violations and report.nonunit_diagonal
    assert not report.triangular
