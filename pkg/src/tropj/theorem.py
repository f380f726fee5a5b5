"""End-to-end comparison of ``val(j)`` with ``-j_trop``, plus randomized sampling."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .curve import cycle_length_formula, cycle_of
from .errors import AlphaTooSmall, SingularCurve
from .geometry import (
    BASE_CASE,
    REFERENCE_LABELS,
    UnimodularMap,
    apply_unimodular,
    case_points,
    classify_vertices,
    reference_polygon,
    unique_interior_point,
)
from .jinvariant import generic_val, j_exact, symbolic_AB, val_j_generic
from .laurent import LaurentPoly, newton_vertices
from .puiseux import INF, PuiseuxNumber
from .subdivision import TropicalPoly, tropicalize

Point = Tuple[int, int]


def default_alpha_margin(f: LaurentPoly) -> Fraction:
    """``10 + 12 * (max - min)`` over the coefficient valuations of ``f``."""
    vals = [c.val() for _, c in f.items()]
    return 10 + 12 * (max(vals) - min(vals))


def reduce_support(f: LaurentPoly, target: Sequence[Point], alpha=None, margin=None) -> LaurentPoly:
    """Add ``t^alpha x^i y^j`` for every target point missing from ``supp(f)``.

    ``alpha`` must exceed the largest coefficient valuation by ``margin``
    (default :func:`default_alpha_margin`); it defaults to the smallest
    integer that does.
    """
    target = [tuple(p) for p in target]
    support = f.support()
    if not support <= set(target):
        raise ValueError("support is not contained in the target set")
    missing = [p for p in target if p not in support]
    if not missing:
        return f
    top = max(c.val() for _, c in f.items())
    margin = default_alpha_margin(f) if margin is None else Fraction(margin)
    if alpha is None:
        alpha = int(top + margin) + 1
    alpha = Fraction(alpha)
    if alpha <= top + margin:
        raise AlphaTooSmall(f"alpha={alpha} must exceed {top + margin}")
    pad = PuiseuxNumber.monomial(1, alpha)
    return f + LaurentPoly({p: pad for p in missing})


@dataclass
class TheoremReport:
    j_trop: Fraction
    val_j_exact: object  # Fraction, INF, or None when singular
    val_j_generic: Optional[Fraction]
    cycle_present: bool
    agreement: bool
    label: str = ""
    case: str = ""
    notes: List[str] = field(default_factory=list)
    formula_length: Optional[Fraction] = None
    generic_A: Optional[Fraction] = None
    u11: Optional[Fraction] = None

    @property
    def singular(self) -> bool:
        return self.val_j_exact is None


def normalize_to_reference(f: LaurentPoly):
    """Classify ``N(f)`` and move ``f`` onto its reference polygon."""
    label, phi = classify_vertices(newton_vertices(f))
    return label, phi, apply_unimodular(phi, f)


def case_lifts(g: LaurentPoly, case: str) -> Dict[Point, object]:
    """Lifts of ``g`` on the points of ``case``; ``INF`` off the support."""
    return {p: (g[p].val() if p in g.support() else INF) for p in case_points(case)}


def check_theorem(f: LaurentPoly, exact: bool = True, pad: bool = True) -> TheoremReport:
    """Compute ``j_trop``, ``val_j`` and ``val(j(f))`` for one polynomial and compare them."""
    unique_interior_point(newton_vertices(f))
    notes: List[str] = []
    F = tropicalize(f)
    curve, cycle = cycle_of(F)
    jt = cycle.length if cycle is not None else Fraction(0)
    formula = None
    if cycle is not None:
        formula = cycle_length_formula(F.lifts, cycle.center, cycle.neighbors)
        if formula != jt:
            notes.append(f"cycle formula {formula} != geometric length {jt}")
        if cycle.flagged_facets:
            notes.append(f"cycle facets with interior lattice points: {cycle.flagged_facets}")

    label, phi, g = normalize_to_reference(f)
    case = BASE_CASE[label]
    u = case_lifts(g, case)
    A, _ = symbolic_AB(case)
    vg = val_j_generic(case, u)
    gA = generic_val(A, u)

    vx = None
    if exact:
        try:
            vx = j_exact(g).valuation
        except SingularCurve as exc:
            notes.append(f"singular: {exc}")
        if vx is not None and pad:
            padded = reduce_support(g, case_points(case))
            vp = j_exact(padded).valuation
            if vp != vx:
                notes.append(f"padding changed val(j): {vx} -> {vp}")

    agree = True
    if cycle is not None and vg != -jt:
        agree = False
        notes.append(f"val_j_generic {vg} != -j_trop {-jt}")
    if vx is not None and vx != vg:
        agree = False
        notes.append(f"val_j_exact {vx} != val_j_generic {vg}")
    if formula is not None and formula != jt:
        agree = False
    return TheoremReport(
        j_trop=jt,
        val_j_exact=vx,
        val_j_generic=vg,
        cycle_present=cycle is not None,
        agreement=agree,
        label=label,
        case=case,
        notes=notes,
        formula_length=formula,
        generic_A=gA,
        u11=u[(1, 1)],
    )


# -- random sampling ---------------------------------------------------------


def _rng(seed: int, index: int) -> random.Random:
    return random.Random(f"{seed}:{index}")


def random_rational(rng: random.Random, lo, hi, max_den: int = 4) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(int(lo * den), int(hi * den)), den)


def random_lifts(rng: random.Random, points: Sequence[Point], lift_range=10, conditioned: bool = True,
                 center: Point = (1, 1)) -> Dict[Point, Fraction]:
    """Rational lifts; with ``conditioned`` the center is drawn low to favor cycles."""
    out = {}
    for p in points:
        if conditioned and p == center:
            out[p] = random_rational(rng, -lift_range, 0)
        elif conditioned:
            out[p] = random_rational(rng, 0, lift_range)
        else:
            out[p] = random_rational(rng, -lift_range, lift_range)
    return out


def random_coefficient(rng: random.Random) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-30, 30)
    return Fraction(num, rng.randint(1, 7))


def random_unimodular(rng: random.Random, bound: int = 3) -> UnimodularMap:
    while True:
        a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
        if abs(a * d - b * c) == 1:
            return UnimodularMap(((a, b), (c, d)), (rng.randint(-3, 3), rng.randint(-3, 3)))


def poly_from_lifts(lifts: Mapping[Point, Fraction], coeffs: Mapping[Point, Fraction]) -> LaurentPoly:
    return LaurentPoly({p: PuiseuxNumber.monomial(coeffs[p], u) for p, u in lifts.items()})


@dataclass
class TrialRecord:
    index: int
    label: str
    lifts: Dict[Point, Fraction]
    cycle_present: bool
    singular: bool
    agreement: bool
    first_pass: bool
    retries: int
    j_trop: Fraction
    val_j_generic: Optional[Fraction]
    val_j_exact: object
    generic_A: Optional[Fraction]
    u11: Optional[Fraction]
    formula_ok: bool
    notes: List[str]
    phi: Optional[UnimodularMap] = None


def _lift_trial(label: str, index: int, seed: int, lift_range, conditioned: bool) -> TrialRecord:
    rng = _rng(seed, index)
    R = reference_polygon(label)
    pts = sorted(R.marked)
    u = random_lifts(rng, pts, lift_range, conditioned)
    F = TropicalPoly(u)
    case = BASE_CASE[label]
    uc = {p: u.get(p, INF) for p in case_points(case)}
    curve, cycle = cycle_of(F)
    jt = cycle.length if cycle is not None else Fraction(0)
    notes = []
    formula_ok = True
    if cycle is not None:
        formula_ok = cycle_length_formula(u, cycle.center, cycle.neighbors) == jt
        if not formula_ok:
            notes.append("cycle formula disagrees with geometric length")
    vg = val_j_generic(case, uc)
    A, _ = symbolic_AB(case)
    gA = generic_val(A, uc)
    agree = formula_ok and (cycle is None or vg == -jt)
    if cycle is not None and vg != -jt:
        notes.append(f"val_j_generic {vg} != -j_trop {-jt}")
    return TrialRecord(index, label, u, cycle is not None, False, agree, agree, 0, jt, vg, None, gA,
                       u[(1, 1)], formula_ok, notes)


def _exact_trial(label: str, index: int, seed: int, lift_range, conditioned: bool, max_retries: int,
                 transform: bool) -> TrialRecord:
    rng = _rng(seed, index)
    R = reference_polygon(label)
    pts = sorted(R.marked)
    u = random_lifts(rng, pts, lift_range, conditioned)
    phi = random_unimodular(rng) if transform else None
    retries = 0
    first = None
    while True:
        coeffs = {p: random_coefficient(rng) for p in pts}
        f = poly_from_lifts(u, coeffs)
        if phi is not None:
            f = apply_unimodular(phi, f)
        rep = check_theorem(f)
        if first is None:
            first = rep.agreement
        if rep.agreement or rep.singular or retries >= max_retries:
            break
        retries += 1
    return TrialRecord(
        index, label, u, rep.cycle_present, rep.singular, rep.agreement, bool(first), retries,
        rep.j_trop, rep.val_j_generic, rep.val_j_exact, rep.generic_A, rep.u11,
        rep.formula_length is None or rep.formula_length == rep.j_trop, rep.notes, phi,
    )


def _run_trial(args):
    mode, label, index, seed, lift_range, conditioned, max_retries, transform = args
    if mode == "lifts":
        return _lift_trial(label, index, seed, lift_range, conditioned)
    return _exact_trial(label, index, seed, lift_range, conditioned, max_retries, transform)


@dataclass
class HarnessSummary:
    label: str
    mode: str
    records: List[TrialRecord]

    @property
    def trials(self) -> int:
        return len(self.records)

    @property
    def cycles(self) -> int:
        return sum(r.cycle_present for r in self.records)

    @property
    def singular(self) -> int:
        return sum(r.singular for r in self.records)

    @property
    def agreements(self) -> int:
        return sum(r.agreement for r in self.records)

    @property
    def first_pass_agreements(self) -> int:
        return sum(r.first_pass for r in self.records)

    @property
    def disagreements(self) -> List[TrialRecord]:
        return [r for r in self.records if not r.agreement and not r.singular]


def random_harness(
    label: str,
    trials: int,
    seed: int = 0,
    lift_range=10,
    mode: str = "lifts",
    conditioned: bool = True,
    max_retries: int = 5,
    transform: bool = False,
    workers: int = 1,
) -> HarnessSummary:
    """Run seeded random trials on a reference polygon (or a case ``Aa``/``Ab``/``Ac``).

    ``mode="lifts"`` compares ``val_j`` with ``-j_trop`` on random lifts;
    ``mode="exact"`` draws coefficients ``c t^u`` and also computes the
    exact ``val(j)``, retrying fresh coefficients on a mismatch.  Each trial
    seeds its own generator from ``(seed, index)``, so results do not
    depend on ``workers``.
    """
    from .geometry import CASE_POLYGON

    label = CASE_POLYGON.get(label, label)
    if label not in REFERENCE_LABELS:
        raise ValueError(f"unknown polygon label {label!r}")
    if mode not in ("lifts", "exact"):
        raise ValueError(f"unknown mode {mode!r}")
    jobs = [(mode, label, k, seed, lift_range, conditioned, max_retries, transform) for k in range(trials)]
    if workers > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_trial, jobs))
    else:
        records = [_run_trial(job) for job in jobs]
    return HarnessSummary(label, mode, records)
