from fractions import Fraction

import pytest

from nctl.laurent import LaurentPolynomial as L


def test_arithmetic():
    v = L.v()
    delta = L.delta()
    assert delta == v + v ** -1
    assert (v - 1) * (v + 1) == v * v - 1
    assert (delta * delta) == v ** 2 + 2 + v ** -2
    assert (v - v).is_zero()


def test_units():
    assert L.monomial(3, -1).is_unit()
    assert not L.delta().is_unit()
    assert not L().is_unit()
    with pytest.raises(ValueError):
        L.delta() ** -1


def test_printing_and_parsing():
    p = L({-2: -1, 0: 2, 4: 1})
    assert str(p) == "-1*v^-2 + 2 + 1*v^4"
    assert L.parse(str(p)) == p
    assert str(L()) == "0"
    assert L.from_json(p.to_json()) == p


def test_evaluation():
    assert L.delta().evaluate(2) == Fraction(5, 2)
