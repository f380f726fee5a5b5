"""Finite Puiseux expressions ``sum c_q * t**q`` with rational ``c_q`` and ``q``.

Values are immutable and always kept in normal form: exponents strictly
increasing, no zero coefficients.  The valuation of a value is its least
exponent; the zero value has valuation ``INF``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Tuple, Union

INF = math.inf
"""The extended-rational infinity.  ``min(INF, q) == q`` and ``INF + q == INF``."""

Scalar = Union[int, Fraction]
Term = Tuple[Fraction, Fraction]


def is_inf(value) -> bool:
    return value == INF


def ext_add(a, b):
    """Addition on Q ∪ {∞}."""
    if is_inf(a) or is_inf(b):
        return INF
    return a + b


class PuiseuxNumber:
    """A finite sum of terms ``coeff * t**exp``.

    Construct from a mapping ``{exponent: coefficient}`` or use
    :meth:`monomial` / :meth:`const`.  Arithmetic accepts ints and Fractions
    on either side.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Union[Mapping, Iterable[Tuple]] = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = Fraction(e)
            acc[e] = acc.get(e, 0) + Fraction(c)
        self.terms: Tuple[Term, ...] = tuple(
            (e, c) for e, c in sorted(acc.items()) if c != 0
        )
        self._hash = None

    @classmethod
    def _from_sorted(cls, terms: Tuple[Term, ...]) -> "PuiseuxNumber":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "PuiseuxNumber":
        return cls.monomial(c, 0)

    @classmethod
    def monomial(cls, c: Scalar, exponent: Scalar) -> "PuiseuxNumber":
        c = Fraction(c)
        if c == 0:
            return ZERO
        return cls._from_sorted(((Fraction(exponent), c),))

    @classmethod
    def coerce(cls, value) -> "PuiseuxNumber":
        if isinstance(value, PuiseuxNumber):
            return value
        if isinstance(value, (int, Rational)):
            return cls.const(Fraction(value))
        raise TypeError(f"cannot convert {value!r} to PuiseuxNumber")

    # -- queries ---------------------------------------------------------

    def val(self):
        """Least exponent, or ``INF`` for zero."""
        return self.terms[0][0] if self.terms else INF

    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero has no leading coefficient")
        return self.terms[0][1]

    def leading_term(self) -> "PuiseuxNumber":
        return PuiseuxNumber._from_sorted(self.terms[:1])

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        try:
            other = PuiseuxNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return PuiseuxNumber._from_sorted(
            tuple((e, c) for e, c in sorted(acc.items()) if c != 0)
        )

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxNumber._from_sorted(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        try:
            other = PuiseuxNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return PuiseuxNumber.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            other = Fraction(other)
            if other == 0:
                return ZERO
            return PuiseuxNumber._from_sorted(tuple((e, c * other) for e, c in self.terms))
        if not isinstance(other, PuiseuxNumber):
            return NotImplemented
        if not self.terms or not other.terms:
            return ZERO
        if len(other.terms) == 1:
            e2, c2 = other.terms[0]
            return PuiseuxNumber._from_sorted(tuple((e + e2, c * c2) for e, c in self.terms))
        if len(self.terms) == 1:
            return other * self
        acc: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return PuiseuxNumber._from_sorted(
            tuple((e, c) for e, c in sorted(acc.items()) if c != 0)
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "PuiseuxNumber":
        """Inverse of a monomial; other values are not invertible here."""
        if len(self.terms) != 1:
            raise ZeroDivisionError("only single-term Puiseux values are invertible")
        e, c = self.terms[0]
        return PuiseuxNumber._from_sorted(((-e, 1 / c),))

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, PuiseuxNumber):
            return NotImplemented
        return self * other.inverse()

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = PuiseuxNumber.const(Fraction(other))
        if not isinstance(other, PuiseuxNumber):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __repr__(self):
        return f"PuiseuxNumber({format_puiseux(self)!r})"

    def __str__(self):
        return format_puiseux(self)


ZERO = PuiseuxNumber._from_sorted(())
ONE = PuiseuxNumber._from_sorted(((Fraction(0), Fraction(1)),))
T = PuiseuxNumber._from_sorted(((Fraction(1), Fraction(1)),))


def val(p) -> Union[Fraction, float]:
    """Valuation (order) of a Puiseux value; ``INF`` for zero."""
    return PuiseuxNumber.coerce(p).val()


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _t_power(e: Fraction) -> str:
    if e == 1:
        return "t"
    if e.denominator == 1:
        return f"t^{e.numerator}"
    return f"t^({e.numerator}/{e.denominator})"


def format_term(e: Fraction, c: Fraction) -> str:
    """Render ``c*t^e`` in the parser's grammar, e.g. ``3/2*t^(1/2)`` or ``1/t``."""
    sign = "-" if c < 0 else ""
    c = abs(c)
    if e == 0:
        return sign + format_rational(c)
    if e < 0:
        # 1/t^k keeps the term inside the grammar's t-division rule
        num = format_rational(c)
        if c.denominator != 1:
            num = f"({num})"
        return f"{sign}{num}/{_t_power(-e)}"
    if c == 1:
        return sign + _t_power(e)
    return f"{sign}{format_rational(c)}*{_t_power(e)}"


def format_puiseux(p: PuiseuxNumber) -> str:
    if not p.terms:
        return "0"
    out = ""
    for idx, (e, c) in enumerate(p.terms):
        s = format_term(e, c)
        if idx == 0:
            out = s
        elif s.startswith("-"):
            out += s
        else:
            out += "+" + s
    return out
