"""
Sparse Laurent polynomials in v with integer coefficients.

>>> v = LaurentPolynomial.v()
>>> str((v + v**-1) * v)
'1 + 1*v^2'
>>> (-(v**3)).is_unit()
True
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, "LaurentPolynomial"]


class LaurentPolynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for e, coef in items:
            clean[int(e)] = clean.get(int(e), 0) + int(coef)
        self._terms = {e: clean[e] for e in sorted(clean) if clean[e] != 0}
        self._hash = None

    @classmethod
    def v(cls) -> LaurentPolynomial:
        return cls({1: 1})

    @classmethod
    def monomial(cls, exponent: int, coef: int = 1) -> LaurentPolynomial:
        return cls({exponent: coef})

    @classmethod
    def const(cls, value: int) -> LaurentPolynomial:
        return cls({0: value})

    @classmethod
    def delta(cls) -> LaurentPolynomial:
        """v + v^{-1}, the value of a closed loop."""
        return cls({-1: 1, 1: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        """True iff the polynomial is ±v^k."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    @staticmethod
    def _coerce(other: Scalar) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial.const(other)
        return NotImplemented

    def __add__(self, other: Scalar) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, coef in other._terms.items():
            out[e] = out.get(e, 0) + coef
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial({e: -coef for e, coef in self._terms.items()})

    def __sub__(self, other: Scalar) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPolynomial:
        return (-self) + other

    def __mul__(self, other: Scalar) -> LaurentPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPolynomial:
        if k < 0:
            if not self.is_unit():
                raise ValueError("only units can be raised to negative powers")
            (e, coef), = self._terms.items()
            return LaurentPolynomial({e * k: coef ** (-k)})
        result = LaurentPolynomial.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.const(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def evaluate(self, value: Fraction | int) -> Fraction:
        value = Fraction(value)
        return sum((coef * value**e for e, coef in self._terms.items()), Fraction(0))

    def coefficients(self) -> list[int]:
        return list(self._terms.values())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, coef in self._terms.items():
            if e == 0:
                parts.append(str(coef))
            elif e == 1:
                parts.append(f"{coef}*v")
            else:
                parts.append(f"{coef}*v^{e}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self._terms!r})"

    def to_json(self) -> list[list[int]]:
        return [[e, coef] for e, coef in self._terms.items()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> LaurentPolynomial:
        return cls((e, coef) for e, coef in data)

    @classmethod
    def parse(cls, text: str) -> LaurentPolynomial:
        """
        Inverse of ``str``.

        >>> str(LaurentPolynomial.parse("-1*v^-2 + 2 + 1*v^4"))
        '-1*v^-2 + 2 + 1*v^4'
        """
        text = text.strip()
        if text == "0":
            return cls()
        terms = []
        for chunk in text.split(" + "):
            m = re.fullmatch(r"(-?\d+)(?:\*v(?:\^(-?\d+))?)?", chunk.strip())
            if not m:
                raise ValueError(f"cannot parse Laurent term {chunk!r}")
            coef = int(m.group(1))
            if "*v" in chunk:
                e = int(m.group(2)) if m.group(2) is not None else 1
            else:
                e = 0
            terms.append((e, coef))
        return cls(terms)


def laurent_add(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    return a + b


def laurent_mul(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    return a * b


def is_unit(a: LaurentPolynomial) -> bool:
    return a.is_unit()
