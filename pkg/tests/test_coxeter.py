import pytest

from nctl.coxeter import (
    StandardCoxeterElement,
    enumerate_std,
    from_cycle,
    from_left_set,
    from_permutation,
    from_word,
    is_standard,
    linear_coxeter,
)
from nctl.perm import Permutation, all_permutations


def test_running_example():
    c = StandardCoxeterElement(3, (1, 3, 4, 2))
    assert c.left_set == {1, 2, 4}
    assert str(c) == "(1,3,4,2)"
    assert Permutation.from_word(4, c.word()) == c.perm
    assert from_word(3, [2, 1, 3]) == c
    assert from_cycle([3, 4, 2, 1]) == c


@pytest.mark.parametrize("n", range(1, 7))
def test_count_and_word_round_trip(n):
    elements = enumerate_std(n)
    assert len(elements) == 2 ** (n - 1)
    assert len(set(elements)) == len(elements)
    for c in elements:
        word = c.word()
        assert sorted(word) == list(range(1, n + 1))
        assert from_word(n, word) == c
        assert from_permutation(c.perm) == c
        assert c.inverse().perm == c.perm.inverse()


@pytest.mark.parametrize("n", range(1, 5))
def test_standard_elements_are_products_of_all_simples(n):
    import itertools

    products = {Permutation.from_word(n + 1, w) for w in itertools.permutations(range(1, n + 1))}
    assert {c.perm for c in enumerate_std(n)} == products
    assert {p for p in all_permutations(n + 1) if is_standard(p)} == products


def test_linear_and_left_sets():
    assert linear_coxeter(4).is_linear()
    assert from_left_set(4, {2, 4}).left_set == {1, 2, 4, 5}
    assert linear_coxeter(3).inverse().cycle_seq == (1, 4, 3, 2)


@pytest.mark.parametrize("seq", [(2, 1, 3), (1, 3, 2, 4), (1, 2, 2)])
def test_rejects_non_standard_cycles(seq):
    with pytest.raises(ValueError):
        StandardCoxeterElement(len(seq) - 1, seq)
