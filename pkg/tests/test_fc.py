import itertools

import pytest

from nctl.coxeter import enumerate_std, linear_coxeter
from nctl.fc import (
    FullyCommutative,
    enumerate_fc,
    from_sequence_pair,
    ij_sets,
    is_321_avoiding,
    is_fc_word,
    normal_form,
    phi,
    to_sequence_pair,
)
from nctl.nc import catalan, enumerate_nc, enumerate_sequence_pairs
from nctl.perm import Permutation, all_permutations, reduced_word, s_length


def contains_321(p):
    return any(p(a) > p(b) > p(c) for a, b, c in itertools.combinations(range(1, p.size + 1), 3))


@pytest.mark.parametrize("size", range(1, 7))
def test_fc_equals_321_avoiding(size):
    fcs = {w.perm for w in enumerate_fc(size - 1)} if size > 1 else {Permutation.identity(1)}
    avoiders = {p for p in all_permutations(size) if not contains_321(p)}
    assert fcs == avoiders
    assert len(avoiders) == catalan(size)
    for p in all_permutations(size):
        assert is_321_avoiding(p) == (p in avoiders)


def test_normal_form_strings():
    w = normal_form(Permutation.from_word(4, [2, 1, 3, 2]))
    assert str(w) == "(s2 s1)(s3 s2)"
    assert normal_form(Permutation.from_word(3, [1, 2, 1])) is None
    assert str(FullyCommutative.identity(3)) == "e"


@pytest.mark.parametrize("n", range(1, 5))
def test_normal_form_words_are_reduced(n):
    for w in enumerate_fc(n):
        assert len(w.word) == s_length(w.perm) == w.length()
        assert Permutation.from_word(n + 1, w.word) == w.perm
        assert is_fc_word(w.word)
        assert is_fc_word(reduced_word(w.perm))
        assert FullyCommutative.from_json(w.to_json()) == w


def test_fc_word_detection():
    assert is_fc_word([1, 3, 2])
    assert not is_fc_word([1, 2, 1])
    assert not is_fc_word([1, 1])


@pytest.mark.parametrize("n", range(1, 6))
def test_sequence_pair_bijection(n):
    pairs = enumerate_sequence_pairs(n)
    images = [from_sequence_pair(n, pair) for pair in pairs]
    assert set(images) == set(enumerate_fc(n))
    for pair, w in zip(pairs, images):
        assert to_sequence_pair(w) == pair


@pytest.mark.parametrize("n", range(1, 6))
def test_phi_is_a_bijection_for_every_c(n):
    for c in enumerate_std(n):
        assert {phi(x) for x in enumerate_nc(c)} == set(enumerate_fc(n))


def test_ij_sets_of_small_element():
    w = normal_form(Permutation.from_word(4, [2, 1, 3, 2]))
    assert ij_sets(w) == ({2, 3}, {1, 2})


def test_phi_on_linear_element_is_identity_map():
    c = linear_coxeter(3)
    for x in enumerate_nc(c):
        if x.perm.is_identity():
            assert phi(x) == FullyCommutative.identity(3)
