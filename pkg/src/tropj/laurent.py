"""Bivariate Laurent polynomials over Puiseux values, plus their text syntax.

Grammar (whitespace insignificant, juxtaposition is multiplication)::

    expr     := term (('+'|'-') term)*
    term     := factor (('*'|'/')? factor)*      '/' only before a power of t
    factor   := rational | var pow? | '(' expr ')' pow?
    var      := 't' | 'x' | 'y'
    pow      := '^' (integer | '(' integer '/' integer ')')
    rational := integer ('/' positive-integer)?

Rational exponents are accepted only on ``t``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Tuple

from .errors import EmptyPolynomial, ParseError
from .puiseux import ONE, ZERO, PuiseuxNumber, format_puiseux

Point = Tuple[int, int]


class LaurentPoly:
    """``sum a_ij x^i y^j`` with :class:`PuiseuxNumber` coefficients (immutable)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Point, object] = None):
        out: Dict[Point, PuiseuxNumber] = {}
        for (i, j), c in (coeffs or {}).items():
            c = PuiseuxNumber.coerce(c)
            key = (int(i), int(j))
            if key in out:
                c = out[key] + c
            if c:
                out[key] = c
            else:
                out.pop(key, None)
        self.coeffs: Dict[Point, PuiseuxNumber] = out

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c=ONE) -> "LaurentPoly":
        return cls({(i, j): c})

    def support(self) -> frozenset:
        return frozenset(self.coeffs)

    def __getitem__(self, point: Point) -> PuiseuxNumber:
        return self.coeffs.get(tuple(point), ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self):
        return self.coeffs.items()

    def __add__(self, other):
        other = _coerce_poly(other)
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] = acc[k] + c if k in acc else c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_coerce_poly(other))

    def __rsub__(self, other):
        return _coerce_poly(other) - self

    def __mul__(self, other):
        other = _coerce_poly(other)
        acc: Dict[Point, PuiseuxNumber] = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                p = c1 * c2
                acc[k] = acc[k] + p if k in acc else p
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.coeffs) != 1:
                raise ZeroDivisionError("negative power of a non-monomial")
            ((i, j), c), = self.coeffs.items()
            return LaurentPoly({(i * k, j * k): c ** k})
        result = LaurentPoly.const(ONE)
        for _ in range(k):
            result = result * self
        return result

    def map_exponents(self, fn) -> "LaurentPoly":
        return LaurentPoly({fn(k): c for k, c in self.coeffs.items()})

    def map_coefficients(self, fn) -> "LaurentPoly":
        return LaurentPoly({k: fn(c) for k, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                other = _coerce_poly(other)
            except TypeError:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _coerce_poly(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    return LaurentPoly.const(PuiseuxNumber.coerce(value))


def newton_vertices(f: LaurentPoly):
    """Vertices of the Newton polygon of ``f`` (counterclockwise)."""
    from .geometry import convex_hull

    if f.is_zero():
        raise EmptyPolynomial("the zero polynomial has no Newton polygon")
    return convex_hull(f.support())


def newton_polygon(f: LaurentPoly):
    """The Newton polygon of ``f`` marked by ``supp(f)``."""
    from .geometry import MarkedPolygon

    return MarkedPolygon(newton_vertices(f), f.support())


# -- formatting --------------------------------------------------------------


def _monomial_text(i: int, j: int) -> str:
    def part(var, e):
        if e == 0:
            return ""
        if e == 1:
            return var
        return f"{var}^{e}"

    return part("x", i) + part("y", j)


def format_poly(f: LaurentPoly) -> str:
    """Compact text form, monomials in descending lexicographic order.

    ``parse(format_poly(f)) == f`` holds for every polynomial.
    """
    if f.is_zero():
        return "0"
    pieces = []
    for (i, j) in sorted(f.coeffs, reverse=True):
        c = f.coeffs[(i, j)]
        mono = _monomial_text(i, j)
        if not mono:
            s = format_puiseux(c) if len(c) == 1 else f"({format_puiseux(c)})"
        elif len(c) == 1:
            (e, a), = c.terms
            if e == 0 and abs(a) == 1:
                s = ("-" if a < 0 else "") + mono
            elif e == 0 and a.denominator == 1:
                s = f"{a}{mono}"
            else:
                s = f"({format_puiseux(c)}){mono}"
        else:
            s = f"({format_puiseux(c)}){mono}"
        pieces.append(s)
    out = pieces[0]
    for s in pieces[1:]:
        out += s if s.startswith("-") else "+" + s
    return out


# -- parsing -----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = list(self._tokenize(text))
        self.pos = 0

    @staticmethod
    def _tokenize(text: str):
        i = 0
        n = len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                start = i
                while i < n and text[i].isdigit():
                    i += 1
                yield ("int", int(text[start:i]), start)
            elif ch in "txy":
                yield ("var", ch, i)
                i += 1
            elif ch in "+-*/^()":
                yield (ch, ch, i)
                i += 1
            elif ch in "·⋅":
                yield ("*", "*", i)
                i += 1
            else:
                raise ParseError(f"unexpected character {ch!r}", i)
        yield ("end", None, n)

    def peek(self, offset: int = 0):
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> LaurentPoly:
        if self.peek()[0] == "end":
            raise ParseError("empty input", 0)
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return result

    def expr(self) -> LaurentPoly:
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.advance()[0] == "-" else 1
        acc = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def _starts_factor(self) -> bool:
        return self.peek()[0] in ("int", "var", "(")

    def term(self) -> LaurentPoly:
        acc = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.advance()
                acc = acc * self.factor()
            elif kind == "/":
                slash = self.advance()
                divisor = self.factor()
                acc = acc * _invert_t_power(divisor, slash[2])
            elif self._starts_factor():
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> LaurentPoly:
        tok = self.peek()
        if tok[0] == "int":
            self.advance()
            value = Fraction(tok[1])
            # a/b is a rational literal only when b is an integer literal
            if self.peek()[0] == "/" and self.peek(1)[0] == "int":
                self.advance()
                den = self.advance()
                if den[1] == 0:
                    raise ParseError("zero denominator", den[2])
                value = value / den[1]
            return LaurentPoly.const(value)
        if tok[0] == "var":
            self.advance()
            name = tok[1]
            if self.peek()[0] == "^":
                exp = self.power(allow_rational=(name == "t"))
            else:
                exp = Fraction(1)
            if name == "t":
                return LaurentPoly.const(PuiseuxNumber.monomial(1, exp))
            return LaurentPoly.monomial(int(exp), 0) if name == "x" else LaurentPoly.monomial(0, int(exp))
        if tok[0] == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            if self.peek()[0] == "^":
                caret = self.peek()
                exp = self.power(allow_rational=_is_t_power(inner))
                if exp.denominator != 1:
                    (c,) = inner.coeffs.values()
                    return LaurentPoly.const(PuiseuxNumber.monomial(1, c.terms[0][0] * exp))
                try:
                    return inner ** int(exp)
                except ZeroDivisionError:
                    raise ParseError("negative power of a non-monomial", caret[2])
            return inner
        raise ParseError(f"unexpected {tok[1]!r}", tok[2])

    def _signed_int(self) -> int:
        sign = 1
        if self.peek()[0] == "-":
            self.advance()
            sign = -1
        return sign * self.expect("int")[1]

    def power(self, allow_rational: bool) -> Fraction:
        self.expect("^")
        if self.peek()[0] == "(":
            open_tok = self.advance()
            num = self._signed_int()
            value = Fraction(num)
            if self.peek()[0] == "/":
                self.advance()
                den = self.expect("int")
                if den[1] == 0:
                    raise ParseError("zero denominator", den[2])
                value = Fraction(num, den[1])
            self.expect(")")
            if value.denominator != 1 and not allow_rational:
                raise ParseError("rational exponents are allowed only on t", open_tok[2])
            return value
        return Fraction(self._signed_int())


def _is_t_power(f: LaurentPoly) -> bool:
    if len(f.coeffs) != 1 or (0, 0) not in f.coeffs:
        return False
    c = f.coeffs[(0, 0)]
    return len(c) == 1 and c.terms[0][1] == 1


def _invert_t_power(divisor: LaurentPoly, position: int) -> LaurentPoly:
    if not _is_t_power(divisor):
        raise ParseError("division is only allowed by a power of t", position)
    c = divisor.coeffs[(0, 0)]
    return LaurentPoly.const(c.inverse())


def parse(text: str) -> LaurentPoly:
    """Parse polynomial text into a fully collected :class:`LaurentPoly`."""
    return _Parser(text).parse()


def lifts_of(f: LaurentPoly) -> Dict[Point, Fraction]:
    """Coefficient valuations ``{(i, j): val(a_ij)}`` over ``supp(f)``."""
    return {k: c.val() for k, c in f.coeffs.items()}
