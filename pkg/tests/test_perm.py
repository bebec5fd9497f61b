import itertools

import pytest

from nctl.perm import (
    Permutation,
    absolute_leq,
    all_permutations,
    bruhat_leq,
    parse_cycles,
    reduced_subword_elements,
    reduced_word,
    reflection_length,
    s_length,
)


def inversions(p):
    return sum(1 for i, j in itertools.combinations(range(1, p.size + 1), 2) if p(i) > p(j))


def test_composition_applies_right_factor_first():
    p = Permutation.from_cycles(3, [(1, 2)])
    q = Permutation.from_cycles(3, [(2, 3)])
    assert (p * q)(2) == p(q(2)) == 3


def test_word_convention_matches_product_of_simples():
    word = [2, 1, 3, 2]
    prod = Permutation.identity(4)
    for a in word:
        prod = prod * Permutation.simple(4, a)
    assert Permutation.from_word(4, word) == prod


def test_cycles_round_trip_and_printing():
    p = parse_cycles(5, "(4,2,1)(3,5)")
    assert str(p) == "(1,4,2)(3,5)"
    assert parse_cycles(5, str(p)) == p
    assert str(Permutation.identity(3)) == "id"
    assert Permutation.from_json(p.to_json()) == p


@pytest.mark.parametrize("bad", [(1, 1, 2), (0, 1, 2), (2, 3, 4)])
def test_rejects_non_permutations(bad):
    with pytest.raises(ValueError):
        Permutation(bad)


@pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
def test_length_and_reduced_words(size):
    for p in all_permutations(size):
        assert s_length(p) == inversions(p)
        word = reduced_word(p)
        assert len(word) == s_length(p)
        assert Permutation.from_word(size, word) == p
        fixed = sum(1 for i in range(1, size + 1) if p(i) == i)
        assert reflection_length(p) == size - len(p.cycles()) - fixed


def test_absolute_order_on_transpositions():
    c = Permutation.from_cycles(4, [(1, 2, 3, 4)])
    assert absolute_leq(Permutation.transposition(4, 1, 3), c)
    assert not absolute_leq(Permutation.from_cycles(4, [(1, 3), (2, 4)]), c)


@pytest.mark.parametrize("size", [3, 4])
def test_bruhat_matches_subword_property(size):
    for v in all_permutations(size):
        below = reduced_subword_elements(reduced_word(v), size)
        for u in all_permutations(size):
            assert bruhat_leq(u, v) == (u in below)
