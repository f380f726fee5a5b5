"""Exact j-invariants of curves with one interior lattice point, and their generic valuations.

Two routes lead to ``j``:

* cubic pipeline: support inside the triangle ``Qc``; homogenize
  ``a_ij x^i y^j z^(3-i-j)`` and use the Aronhold invariants ``S``, ``T``;
* quartic pipeline: support of y-degree at most two; completing the square
  gives ``w^2 = q(x)`` with ``q = c1^2 - 4 c0 c2`` and the binary quartic
  invariants ``I``, ``J`` apply.

In both cases ``j = c X^3 / (lam X^3 + mu Y^2)``; the constants come from
:func:`calibrate`, which fits them against the Weierstrass formula.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .errors import AllTermsInfinite, CalibrationFailure, SingularCurve, UnsupportedSupport
from .geometry import case_points
from .invariants import cubic_S, cubic_T, form_monomials, quartic_I, quartic_J
from .laurent import LaurentPoly
from .puiseux import INF, ONE, ZERO, PuiseuxNumber, is_inf
from .sympoly import SymPoly, nullspace

Point = Tuple[int, int]

WEIERSTRASS_FAMILY = ((-1, 0), (0, -1), (1, 1), (2, 3), (-3, 5), (1, -2), (5, 7))


def weierstrass_j(a, b) -> Fraction:
    """``1728 * 4a^3 / (4a^3 + 27b^2)`` for ``y^2 = x^3 + a x + b``."""
    a, b = Fraction(a), Fraction(b)
    den = 4 * a ** 3 + 27 * b ** 2
    if den == 0:
        raise SingularCurve(f"y^2 = x^3 + {a}x + {b} is singular")
    return 1728 * 4 * a ** 3 / den


def weierstrass_poly(a, b) -> LaurentPoly:
    """``y^2 - x^3 - a x - b``."""
    return LaurentPoly({(0, 2): 1, (3, 0): -1, (1, 0): -Fraction(a), (0, 0): -Fraction(b)})


# -- invariant values --------------------------------------------------------


def _normalize_translation(f: LaurentPoly) -> LaurentPoly:
    mi = min(i for i, _ in f.support())
    mj = min(j for _, j in f.support())
    return f.map_exponents(lambda p: (p[0] - mi, p[1] - mj))


def fits_cubic(f: LaurentPoly) -> bool:
    return all(i >= 0 and j >= 0 and i + j <= 3 for i, j in f.support())


def quartic_coefficients(f: LaurentPoly) -> Optional[list]:
    """Coefficients ``q_0..q_4`` of ``c1^2 - 4 c0 c2`` or ``None`` if ``f`` is not y-quadratic
    with quartic discriminant."""
    if any(j < 0 or j > 2 or i < 0 for i, j in f.support()):
        return None
    c = [dict() for _ in range(3)]
    for (i, j), a in f.items():
        c[j][i] = a
    q: Dict[int, PuiseuxNumber] = {}
    for i1, a1 in c[1].items():
        for i2, a2 in c[1].items():
            q[i1 + i2] = q.get(i1 + i2, ZERO) + a1 * a2
    for i0, a0 in c[0].items():
        for i2, a2 in c[2].items():
            q[i0 + i2] = q.get(i0 + i2, ZERO) - a0 * a2 * 4
    if any(k > 4 and v for k, v in q.items()):
        return None
    return [q.get(k, ZERO) for k in range(5)]


def cubic_invariant_values(f: LaurentPoly, S: SymPoly = None, T: SymPoly = None):
    S = S or cubic_S()
    T = T or cubic_T()
    vals = {m: f[(m[0], m[1])] for m in form_monomials(3, 3)}
    return S.evaluate(vals, ONE), T.evaluate(vals, ONE)


def quartic_invariant_values(q: Sequence, I: SymPoly = None, J: SymPoly = None):
    I = I or quartic_I()
    J = J or quartic_J()
    vals = {(k, 4 - k): PuiseuxNumber.coerce(q[k]) for k in range(5)}
    return I.evaluate(vals, ONE), J.evaluate(vals, ONE)


def _swap(f: LaurentPoly) -> LaurentPoly:
    return f.map_exponents(lambda p: (p[1], p[0]))


def pipeline_values(f: LaurentPoly, pipeline: Optional[str] = None):
    """``(pipeline, X, Y)`` with ``X``, ``Y`` the invariant values for ``f``."""
    g = _normalize_translation(f)
    if pipeline in (None, "cubic") and fits_cubic(g):
        X, Y = cubic_invariant_values(g)
        return "cubic", X, Y
    if pipeline in (None, "quartic"):
        for h in (g, _normalize_translation(_swap(g))):
            q = quartic_coefficients(h)
            if q is not None:
                X, Y = quartic_invariant_values(q)
                return "quartic", X, Y
    raise UnsupportedSupport(f"support {sorted(f.support())} fits neither pipeline")


# -- calibration -------------------------------------------------------------


@dataclass(frozen=True)
class PipelineConstants:
    """``j = scale * X^3 / (lam * X^3 + mu * Y^2)``."""

    scale: Fraction
    lam: int
    mu: int


@dataclass(frozen=True)
class Calibration:
    cubic: PipelineConstants
    quartic: PipelineConstants

    def __getitem__(self, name: str) -> PipelineConstants:
        return getattr(self, name)


def _fit(samples) -> PipelineConstants:
    rows = []
    for j, X, Y in samples:
        X3 = X ** 3
        rows.append({0: j * X3, 1: j * Y ** 2, 2: -X3})
    basis = nullspace(rows, 3)
    if len(basis) != 1:
        raise CalibrationFailure(f"expected a one-dimensional fit, found dimension {len(basis)}")
    lam, mu, scale = basis[0]
    if lam == 0 and mu == 0:
        raise CalibrationFailure("degenerate fit")
    from math import gcd

    den = 1
    for v in (lam, mu):
        den = den * v.denominator // gcd(den, v.denominator)
    li, mi = int(lam * den), int(mu * den)
    g = gcd(li, mi)
    factor = Fraction(den, g)
    if li < 0 or (li == 0 and mi < 0):
        factor = -factor
    return PipelineConstants(scale * factor, int(lam * factor), int(mu * factor))


def _random_y_quadratic_cubic(rng: random.Random) -> LaurentPoly:
    coeffs = {}
    for i in range(4):
        for j in range(3 - i + 1):
            if j == 3:
                continue
            coeffs[(i, j)] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return LaurentPoly(coeffs)


def calibrate(
    cubic_invariants: Optional[Tuple[SymPoly, SymPoly]] = None,
    quartic_invariants: Optional[Tuple[SymPoly, SymPoly]] = None,
    checks: int = 20,
    seed: int = 0,
) -> Calibration:
    """Fit the j-invariant constants of both pipelines to ``j = 1728 4a^3/(4a^3 + 27b^2)``.

    The fit is then cross-checked on random cubics without ``y^3`` term,
    which both pipelines can handle.  Raises :class:`CalibrationFailure`
    when either step fails, e.g. for a wrong invariant formula.
    """
    S, T = cubic_invariants or (cubic_S(), cubic_T())
    I, J = quartic_invariants or (quartic_I(), quartic_J())
    cubic_samples, quartic_samples = [], []
    for a, b in WEIERSTRASS_FAMILY:
        j = weierstrass_j(a, b)
        f = weierstrass_poly(a, b)
        X, Y = cubic_invariant_values(f, S, T)
        cubic_samples.append((j, X.leading_coefficient() if X else 0, Y.leading_coefficient() if Y else 0))
        X, Y = quartic_invariant_values(quartic_coefficients(f), I, J)
        quartic_samples.append((j, X.leading_coefficient() if X else 0, Y.leading_coefficient() if Y else 0))
    cal = Calibration(_fit(cubic_samples), _fit(quartic_samples))

    rng = random.Random(seed)
    done = 0
    attempts = 0
    while done < checks:
        attempts += 1
        if attempts > 50 * checks:
            raise CalibrationFailure("could not find enough smooth test curves")
        f = _random_y_quadratic_cubic(rng)
        try:
            jc = _j_from_values(cal.cubic, *cubic_invariant_values(f, S, T))
            jq = _j_from_values(cal.quartic, *quartic_invariant_values(quartic_coefficients(f), I, J))
        except SingularCurve:
            continue
        if jc[0] * jq[1] != jq[0] * jc[1]:
            raise CalibrationFailure(f"pipelines disagree on {f}")
        done += 1
    return cal


@lru_cache(maxsize=1)
def constants() -> Calibration:
    return calibrate()


def _j_from_values(k: PipelineConstants, X, Y):
    X3 = X ** 3
    num = X3 * k.scale
    den = X3 * k.lam + (Y ** 2) * k.mu
    if (den == 0) if not isinstance(den, PuiseuxNumber) else den.is_zero():
        raise SingularCurve("the j-invariant denominator vanishes")
    return num, den


# -- exact j -----------------------------------------------------------------


@dataclass(frozen=True)
class JValue:
    numerator: PuiseuxNumber
    denominator: PuiseuxNumber
    valuation: object  # Fraction, or INF when j = 0
    pipeline: str = ""

    def ratio_equals(self, num, den) -> bool:
        """``numerator/denominator == num/den`` by cross multiplication."""
        return self.numerator * PuiseuxNumber.coerce(den) == self.denominator * PuiseuxNumber.coerce(num)


def j_exact(f: LaurentPoly, pipeline: Optional[str] = None) -> JValue:
    """Exact ``j(f)`` as a reduced Puiseux fraction with its valuation.

    The pair is scaled so that the smaller of the two valuations is zero and
    the numerator (or, for ``j = 0``, the denominator) has leading
    coefficient one.
    """
    name, X, Y = pipeline_values(f, pipeline)
    num, den = _j_from_values(constants()[name], X, Y)
    num = PuiseuxNumber.coerce(num)
    den = PuiseuxNumber.coerce(den)
    shift = min(num.val(), den.val())
    ref = num if num else den
    norm = PuiseuxNumber.monomial(ref.leading_coefficient(), shift)
    num, den = num / norm, den / norm
    valuation = INF if num.is_zero() else num.val() - den.val()
    return JValue(num, den, valuation, name)


# -- symbolic A, B -----------------------------------------------------------


def _symbolic_invariants(case: str) -> Tuple[SymPoly, SymPoly]:
    pts = case_points(case)
    if case == "Ac":
        monos = form_monomials(3, 3)
        subs = {m: SymPoly.var(pts, (m[0], m[1])) for m in monos}
        return cubic_S().substitute(subs, pts), cubic_T().substitute(subs, pts)
    zero = SymPoly.const(pts, 0)
    c = [dict() for _ in range(3)]
    for (i, j) in pts:
        c[j][i] = SymPoly.var(pts, (i, j))
    q: Dict[int, SymPoly] = {}
    for i1, a1 in c[1].items():
        for i2, a2 in c[1].items():
            q[i1 + i2] = q.get(i1 + i2, zero) + a1 * a2
    for i0, a0 in c[0].items():
        for i2, a2 in c[2].items():
            q[i0 + i2] = q.get(i0 + i2, zero) - a0 * a2 * 4
    subs = {(k, 4 - k): q.get(k, zero) for k in range(5)}
    return quartic_I().substitute(subs, pts), quartic_J().substitute(subs, pts)


@lru_cache(maxsize=None)
def _symbolic(case: str):
    if case not in ("Aa", "Ab", "Ac"):
        raise ValueError(f"unknown case {case!r}")
    X, Y = _symbolic_invariants(case)
    k = constants()["cubic" if case == "Ac" else "quartic"]
    X3 = X ** 3
    A_raw = X3 * k.scale
    B_raw = X3 * k.lam + (Y ** 2) * k.mu
    A = A_raw.primitive()
    B = B_raw.primitive()
    return A, B, A_raw.content() * _sign(A_raw, A), B_raw.content() * _sign(B_raw, B)


def _sign(raw: SymPoly, prim: SymPoly) -> int:
    exps, c = next(iter(prim.terms()))
    return 1 if (raw.coefficient(exps) > 0) == (c > 0) else -1


def symbolic_AB(case: str) -> Tuple[SymPoly, SymPoly]:
    """Integer primitive ``A``, ``B`` with ``j = A / B`` on the marked set of ``case``.

    Variables are the points of :func:`tropj.geometry.case_points`.
    """
    A, B, _, _ = _symbolic(case)
    return A, B


def specialization_scales(case: str) -> Tuple[Fraction, Fraction]:
    """``(alpha, beta)`` with ``A = num / alpha`` and ``B = den / beta``, where
    ``num = scale X^3`` and ``den = lam X^3 + mu Y^2`` are the pipeline values."""
    _, _, a, b = _symbolic(case)
    return a, b


def _weights(H: SymPoly, u: Mapping[Point, object]):
    out = []
    for p in H.variables:
        w = u.get(p, INF)
        out.append(None if is_inf(w) else Fraction(w))
    return out


def generic_val(H: SymPoly, u: Mapping[Point, object]) -> Fraction:
    """``min(u . omega)`` over the monomials of ``H``.

    Monomials involving a variable whose lift is infinite are skipped.
    """
    best = H.min_weight(_weights(H, u))
    if best is None:
        raise AllTermsInfinite("every monomial involves an infinite lift")
    return Fraction(best)


def val_j_generic(case: str, u: Mapping[Point, object]) -> Fraction:
    A, B = symbolic_AB(case)
    return generic_val(A, u) - generic_val(B, u)
