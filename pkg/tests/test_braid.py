from nctl import reference as ref
from nctl.braid import BraidWord, free_reduce, lift_standard_form, lift_transposition, project, sign
from nctl.coxeter import StandardCoxeterElement, enumerate_std
from nctl.nc import NoncrossingPartition, enumerate_nc
from nctl.perm import Permutation, parse_cycles


def test_lift_pin():
    ex = ref.BRAID_EXAMPLE
    c = StandardCoxeterElement(len(ex["c"]) - 1, ex["c"])
    x = NoncrossingPartition.from_perm(c, parse_cycles(c.size, ex["x"]))
    assert str(lift_standard_form(x)) == ex["lift"]


def test_lift_projects_to_x():
    for n in range(1, 5):
        for c in enumerate_std(n):
            for x in enumerate_nc(c):
                assert project(lift_standard_form(x)) == x.perm


def test_transposition_lift_is_a_conjugate_of_a_generator():
    for n in range(1, 5):
        for c in enumerate_std(n):
            for j in range(1, n + 1):
                for i in range(j + 1, n + 2):
                    b = lift_transposition(c, j, i)
                    assert project(b) == Permutation.transposition(n + 1, j, i)
                    head = b.letters[: i - j - 1]
                    tail = b.letters[i - j :]
                    assert BraidWord(n, head).inverse().letters == tail
                    assert all(e == sign(c, a) for a, e in head)


def test_word_operations():
    b = BraidWord(3, ((1, 1), (2, -1)))
    assert str(b) == "s1 s2^-1"
    assert str(b.inverse()) == "s2 s1^-1"
    assert len(free_reduce(b + b.inverse())) == 0
    assert b.to_json() == [[1, 1], [2, -1]]
    assert str(BraidWord(3, ())) == "e"
