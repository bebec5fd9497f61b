import pytest

from nctl import reference as ref
from nctl.coxeter import StandardCoxeterElement, enumerate_std, linear_coxeter
from nctl.fc import ij_sets, normal_form, phi
from nctl.nc import NoncrossingPartition, enumerate_nc
from nctl.perm import Permutation, parse_cycles
from nctl.stdform import (
    Syllable,
    count_reduced_subwords,
    cover_relations,
    distinguished_expression,
    distinguished_expression_search,
    extract_w,
    fc_subwords,
    fc_subwords_brute_force,
    linear_extension,
    reduced_subword_positions,
    standard_form,
    vector_leq,
    vertical_vector,
)

def _element(ex, key="x"):
    c = StandardCoxeterElement(len(ex["c"]) - 1, ex["c"])
    return NoncrossingPartition.from_perm(c, parse_cycles(c.size, ex[key]))


def test_syllable_shape():
    syl = Syllable(2, 5)
    assert syl.word == (4, 3, 2, 3, 4)
    assert syl.left_part == (4, 3) and syl.right_part == (3, 4)
    assert str(Syllable(3, 4)) == "(s3)"


def test_single_cycle_pin():
    x = _element(ref.CYCLE_EXAMPLE)
    assert str(standard_form(x)) == ref.CYCLE_EXAMPLE["standard_form"]


def test_two_cycle_pin():
    ex = ref.SMALL_EXAMPLE
    x = _element(ex)
    assert str(standard_form(x)) == ex["standard_form"]
    assert vertical_vector(x) == ex["vector"]
    words = {normal_form(Permutation.from_word(4, w)) for w in ex["fc_subwords"]}
    assert fc_subwords(x) == words
    assert extract_w(x).perm == Permutation.from_word(4, ex["extracted_word"])
    assert vertical_vector(_element(ex, "y")) == ex["y_vector"]


def test_extraction_pin():
    ex = ref.EXTRACTION_EXAMPLE
    c = StandardCoxeterElement(len(ex["c"]) - 1, ex["c"])
    x = NoncrossingPartition.from_blocks(c, ex["blocks"])
    assert [p.vertices for p in x.polygons] == ex["polygon_order"]
    assert str(standard_form(x)) == ex["standard_form"]
    w = extract_w(x)
    assert str(w) == ex["w"]
    assert tuple(map(set, ij_sets(w))) == (ex["I"], ex["J"])


@pytest.mark.parametrize("n", range(1, 6))
def test_distinguished_expression_matches_search(n):
    for c in enumerate_std(n):
        for x in enumerate_nc(c):
            for polygon in x.polygons:
                if len(polygon.vertices) <= 5:
                    assert distinguished_expression(c, polygon.vertices) == distinguished_expression_search(c, polygon.vertices)


@pytest.mark.parametrize("n", range(1, 5))
def test_standard_form_multiplies_to_x(n):
    for c in enumerate_std(n):
        for x in enumerate_nc(c):
            assert Permutation.from_word(c.size, standard_form(x).word) == x.perm


@pytest.mark.parametrize("n", range(1, 4))
def test_fc_subwords_dp_matches_brute_force(n):
    for c in enumerate_std(n):
        for x in enumerate_nc(c):
            assert fc_subwords(x) == fc_subwords_brute_force(x)


def test_reduced_subword_count_matches_enumeration():
    for c in enumerate_std(3):
        for x in enumerate_nc(c):
            word = standard_form(x).word
            target = phi(x).perm
            assert count_reduced_subwords(word, target) == len(reduced_subword_positions(word, target)) == 1


def test_linear_extension_is_compatible_with_order():
    c = linear_coxeter(4)
    order = linear_extension(c)
    for a in range(len(order)):
        for b in range(a):
            assert not (vertical_vector(order[a]) != vertical_vector(order[b]) and vector_leq(vertical_vector(order[a]), vertical_vector(order[b])))
    assert len(cover_relations(linear_coxeter(3))) == len(ref.LATTICE_N3["covers"])
