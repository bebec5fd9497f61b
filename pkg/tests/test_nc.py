import pytest

from nctl import reference as ref
from nctl.coxeter import StandardCoxeterElement, enumerate_std, linear_coxeter
from nctl.nc import (
    NoncrossingPartition,
    catalan,
    du_sets,
    enumerate_nc,
    enumerate_sequence_pairs,
    involution,
    leftmost_enlargeable,
    mn_sets,
    nc_by_brute_force,
    psi1,
    psi2,
)
from nctl.perm import parse_cycles


@pytest.mark.parametrize("n", range(1, 5))
def test_enumeration_matches_absolute_order(n):
    for c in enumerate_std(n):
        assert {x.perm for x in enumerate_nc(c)} == nc_by_brute_force(c)


@pytest.mark.parametrize("n", range(1, 7))
def test_catalan(n):
    assert len(enumerate_nc(linear_coxeter(n))) == catalan(n + 1)
    assert len(enumerate_sequence_pairs(n)) == catalan(n + 1)


def test_catalan_values():
    assert [catalan(m) for m in range(1, 9)] == [1, 2, 5, 14, 42, 132, 429, 1430]


def test_involution_example():
    ex = ref.INVOLUTION_EXAMPLE
    c = StandardCoxeterElement(len(ex["c"]) - 1, ex["c"])
    assert c.left_set == ex["left"]
    x = NoncrossingPartition.from_blocks(c, ex["blocks"])
    assert mn_sets(x) == (ex["M"], ex["N"])
    assert set(leftmost_enlargeable(x, 8).vertices) == {1, 5, 11}
    y = involution(x)
    assert y == NoncrossingPartition.from_blocks(c, ex["image"])
    assert involution(y) == x


def test_from_blocks_rejects_crossings():
    c = linear_coxeter(3)
    with pytest.raises(ValueError):
        NoncrossingPartition.from_blocks(c, [{1, 3}, {2, 4}])


def test_psi_maps_are_bijections():
    for n in range(1, 6):
        for c in enumerate_std(n):
            pairs = set(enumerate_sequence_pairs(n))
            images1 = {psi1(x) for x in enumerate_nc(c)}
            images2 = {psi2(x) for x in enumerate_nc(c)}
            assert images1 == pairs == images2


def test_du_sets_and_string_form():
    c = StandardCoxeterElement(3, (1, 3, 4, 2))
    x = NoncrossingPartition.from_perm(c, parse_cycles(4, "(1,3,4)"))
    assert str(du_sets(x)) == "({1,3},{3,4})"
    assert NoncrossingPartition.from_json(x.to_json()) == x
