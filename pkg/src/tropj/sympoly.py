"""Sparse multivariate polynomials with exact coefficients.

Exponent vectors are packed into a single Python int (``BITS`` bits per
variable) so that multiplying monomials is integer addition.  Exponents
must stay below ``2**BITS``; degree-12 invariants are far inside that.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterator, Mapping, Sequence, Tuple

BITS = 6
_MASK = (1 << BITS) - 1


class SymPoly:
    """Polynomial in the named variables ``variables`` (a tuple of hashables)."""

    __slots__ = ("variables", "_terms")

    def __init__(self, variables: Sequence, terms: Mapping[Tuple[int, ...], object] = None):
        self.variables = tuple(variables)
        packed: Dict[int, object] = {}
        for exps, c in (terms or {}).items():
            if c == 0:
                continue
            key = self._pack(exps)
            packed[key] = packed.get(key, 0) + c
        self._terms = {k: c for k, c in packed.items() if c != 0}

    @classmethod
    def _raw(cls, variables, packed: Dict[int, object]) -> "SymPoly":
        obj = cls.__new__(cls)
        obj.variables = variables
        obj._terms = packed
        return obj

    def _pack(self, exps: Sequence[int]) -> int:
        if len(exps) != len(self.variables):
            raise ValueError("exponent tuple has the wrong length")
        key = 0
        for idx, e in enumerate(exps):
            if e < 0 or e > _MASK:
                raise ValueError(f"exponent {e} out of range")
            key |= e << (BITS * idx)
        return key

    def _unpack(self, key: int) -> Tuple[int, ...]:
        return tuple((key >> (BITS * idx)) & _MASK for idx in range(len(self.variables)))

    @classmethod
    def var(cls, variables: Sequence, name) -> "SymPoly":
        variables = tuple(variables)
        idx = variables.index(name)
        return cls._raw(variables, {1 << (BITS * idx): 1})

    @classmethod
    def const(cls, variables: Sequence, c) -> "SymPoly":
        return cls._raw(tuple(variables), {0: c} if c != 0 else {})

    # -- views ----------------------------------------------------------

    def terms(self) -> Iterator[Tuple[Tuple[int, ...], object]]:
        for key, c in self._terms.items():
            yield self._unpack(key), c

    def as_dict(self) -> Dict[Tuple[int, ...], object]:
        return dict(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set:
        return {sum(e) for e, _ in self.terms()}

    def is_homogeneous(self, degree: int = None) -> bool:
        degs = self.degrees()
        return len(degs) <= 1 and (degree is None or degs <= {degree})

    def coefficient(self, exps: Sequence[int]):
        return self._terms.get(self._pack(exps), 0)

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "SymPoly"):
        if other.variables != self.variables:
            raise ValueError("polynomials over different variables")

    def __add__(self, other):
        if not isinstance(other, SymPoly):
            other = SymPoly.const(self.variables, other)
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return SymPoly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly._raw(self.variables, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SymPoly):
            other = SymPoly.const(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return SymPoly.const(self.variables, other) - self

    def __mul__(self, other):
        if not isinstance(other, SymPoly):
            if other == 0:
                return SymPoly._raw(self.variables, {})
            return SymPoly._raw(self.variables, {k: c * other for k, c in self._terms.items()})
        self._check(other)
        out: Dict[int, object] = {}
        get = out.get
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                out[k] = get(k, 0) + c1 * c2
        return SymPoly._raw(self.variables, {k: c for k, c in out.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = SymPoly.const(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self):
        return hash((self.variables, frozenset(self._terms.items())))

    # -- utilities ------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        coeffs = [Fraction(c) for c in self._terms.values()]
        if not coeffs:
            return Fraction(0)
        den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in coeffs), 1)
        num = reduce(gcd, (int(c * den) for c in coeffs), 0)
        return Fraction(num, den)

    def primitive(self) -> "SymPoly":
        """Integer primitive part; the sign is kept."""
        c = self.content()
        if c == 0:
            return self
        out = {}
        for k, v in self._terms.items():
            q = Fraction(v) / c
            out[k] = int(q)
        return SymPoly._raw(self.variables, out)

    def substitute(self, values: Mapping, target_variables: Sequence) -> "SymPoly":
        """Replace every variable by a :class:`SymPoly` over ``target_variables``."""
        target_variables = tuple(target_variables)
        one = SymPoly.const(target_variables, 1)
        cache: Dict[Tuple[int, int], SymPoly] = {}

        def power(idx, e):
            if (idx, e) not in cache:
                base = values[self.variables[idx]]
                cache[(idx, e)] = base ** e
            return cache[(idx, e)]

        total = SymPoly._raw(target_variables, {})
        for exps, c in self.terms():
            term = one * c
            for idx, e in enumerate(exps):
                if e:
                    term = term * power(idx, e)
            total = total + term
        return total

    def evaluate(self, values: Mapping, one=1):
        """Evaluate at ``values[var]`` (any ring elements supporting ``+``, ``*``, ``**``)."""
        cache = {}
        total = None
        for exps, c in self.terms():
            term = None
            for idx, e in enumerate(exps):
                if not e:
                    continue
                key = (idx, e)
                if key not in cache:
                    cache[key] = values[self.variables[idx]] ** e
                term = cache[key] if term is None else term * cache[key]
            term = (one if term is None else term) * c
            total = term if total is None else total + term
        return total if total is not None else one * 0

    def min_weight(self, weights: Sequence) -> object:
        """``min(w . omega)`` over monomials; variables with weight ``None`` are skipped."""
        best = None
        for exps, _ in self.terms():
            s = 0
            skip = False
            for e, w in zip(exps, weights):
                if e:
                    if w is None:
                        skip = True
                        break
                    s += e * w
            if skip:
                continue
            if best is None or s < best:
                best = s
        return best

    def to_text(self) -> str:
        """One ``coeff exponent-tuple`` line per term, sorted by exponent tuple."""
        lines = []
        for exps, c in sorted(self.terms(), key=lambda t: t[0], reverse=True):
            lines.append(f"{c} ({','.join(map(str, exps))})")
        return "\n".join(lines) + ("\n" if lines else "")

    def __repr__(self):
        return f"SymPoly({len(self)} terms over {len(self.variables)} variables)"


def nullspace(rows: Sequence[Mapping[int, Fraction]], ncols: int):
    """Exact right nullspace of a sparse matrix given as row dicts ``{col: value}``.

    Returns a list of basis vectors (lists of Fractions).
    """
    pivots: Dict[int, Dict[int, Fraction]] = {}
    for row in rows:
        r = {k: Fraction(v) for k, v in row.items() if v != 0}
        # reduce against existing pivots
        changed = True
        while r and changed:
            changed = False
            for col in sorted(r):
                if col in pivots:
                    factor = r[col]
                    for k, v in pivots[col].items():
                        nv = r.get(k, 0) - factor * v
                        if nv:
                            r[k] = nv
                        else:
                            r.pop(k, None)
                    changed = True
                    break
        if not r:
            continue
        col = min(r)
        lead = r[col]
        r = {k: v / lead for k, v in r.items()}
        # keep pivots fully reduced
        for pc, prow in pivots.items():
            if col in prow:
                factor = prow[col]
                for k, v in r.items():
                    nv = prow.get(k, 0) - factor * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        pivots[col] = r
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for pc, prow in pivots.items():
            vec[pc] = -prow.get(fc, Fraction(0))
        basis.append(vec)
    return basis
