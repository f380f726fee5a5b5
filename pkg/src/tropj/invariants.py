"""Classical invariants of ternary cubics and binary quartics, derived from scratch.

An invariant of degree ``d`` of forms of degree ``n`` in ``k`` variables is
found as the common kernel of the ``sl_k`` root operators ``x_a d/dx_b``
acting on the weight-balanced degree-``d`` monomials in the coefficients.
This yields the Aronhold invariants ``S`` (degree 4) and ``T`` (degree 6)
of the ternary cubic and ``I`` (degree 2), ``J`` (degree 3) of the binary
quartic, each up to a scalar which :func:`tropj.jinvariant.calibrate` fixes.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, Tuple

from .sympoly import SymPoly, nullspace

Monomial = Tuple[int, ...]


def form_monomials(k: int, n: int) -> Tuple[Monomial, ...]:
    """Exponent vectors of degree-``n`` monomials in ``k`` variables, lexicographically descending."""
    out = [m for m in itertools.product(range(n + 1), repeat=k) if sum(m) == n]
    return tuple(sorted(out, reverse=True))


def _weighted_monomials(monos, degree, target):
    """Multisets of ``degree`` coefficient indices whose exponent sum equals ``target``."""
    k = len(target)
    res = []
    for combo in itertools.combinations_with_replacement(range(len(monos)), degree):
        tot = [0] * k
        for idx in combo:
            for a in range(k):
                tot[a] += monos[idx][a]
        if tuple(tot) == target:
            exps = [0] * len(monos)
            for idx in combo:
                exps[idx] += 1
            res.append(tuple(exps))
    return res


def _apply_root(exps, monos, index, a, b):
    """Image of a coefficient monomial under the derivation induced by ``x_a d/dx_b``.

    ``x_a d/dx_b`` sends ``x^m`` to ``m_b x^(m + e_a - e_b)``, so the
    coefficient of ``x^m'`` changes by ``(m'_b + 1) c_(m' - e_a + e_b)``;
    the chain rule then replaces one factor ``c_m'`` of the monomial.
    """
    out: Dict[Tuple[int, ...], int] = {}
    for src, e in enumerate(exps):
        if not e:
            continue
        m = monos[src]
        if m[a] == 0:
            continue
        tgt_mono = list(m)
        tgt_mono[a] -= 1
        tgt_mono[b] += 1
        tgt = index[tuple(tgt_mono)]
        new = list(exps)
        new[src] -= 1
        new[tgt] += 1
        key = tuple(new)
        out[key] = out.get(key, 0) + e * (m[b] + 1)
    return out


@lru_cache(maxsize=None)
def form_invariants(k: int, n: int, degree: int) -> Tuple[SymPoly, ...]:
    """Basis of the ``SL_k`` invariants of the given degree, as integer primitive polys.

    Variables are the coefficient monomials of :func:`form_monomials`.
    """
    monos = form_monomials(k, n)
    if (degree * n) % k:
        return ()
    target = tuple([degree * n // k] * k)
    cands = _weighted_monomials(monos, degree, target)
    if not cands:
        return ()
    index = {m: i for i, m in enumerate(monos)}
    rows: Dict[Tuple[Tuple[int, int, int], Tuple[int, ...]], Dict[int, int]] = {}
    for col, exps in enumerate(cands):
        for a in range(k):
            for b in range(k):
                if a == b:
                    continue
                for img, coeff in _apply_root(exps, monos, index, a, b).items():
                    row = rows.setdefault(((a, b), img), {})
                    row[col] = row.get(col, 0) + coeff
    basis = nullspace(list(rows.values()), len(cands))
    polys = []
    for vec in basis:
        p = SymPoly(monos, {cands[c]: v for c, v in enumerate(vec) if v != 0}).primitive()
        polys.append(p)
    return tuple(polys)


def _normalize_sign(p: SymPoly, anchor) -> SymPoly:
    return -p if p.coefficient(anchor) < 0 else p


@lru_cache(maxsize=None)
def cubic_S() -> SymPoly:
    """Degree-4 invariant of ``sum c_m x^m`` (ternary cubic), coefficient of ``c_xyz^4`` positive."""
    (S,) = form_invariants(3, 3, 4)
    monos = form_monomials(3, 3)
    anchor = tuple(4 if m == (1, 1, 1) else 0 for m in monos)
    return _normalize_sign(S, anchor)


@lru_cache(maxsize=None)
def cubic_T() -> SymPoly:
    """Degree-6 invariant of the ternary cubic, coefficient of ``c_xyz^6`` positive."""
    (T,) = form_invariants(3, 3, 6)
    monos = form_monomials(3, 3)
    anchor = tuple(6 if m == (1, 1, 1) else 0 for m in monos)
    return _normalize_sign(T, anchor)


@lru_cache(maxsize=None)
def quartic_I() -> SymPoly:
    """Degree-2 invariant of the binary quartic, coefficient of ``c_{x^2 z^2}^2`` positive."""
    (I,) = form_invariants(2, 4, 2)
    monos = form_monomials(2, 4)
    anchor = tuple(2 if m == (2, 2) else 0 for m in monos)
    return _normalize_sign(I, anchor)


@lru_cache(maxsize=None)
def quartic_J() -> SymPoly:
    """Degree-3 invariant of the binary quartic, coefficient of ``c_{x^2 z^2}^3`` positive."""
    (J,) = form_invariants(2, 4, 3)
    monos = form_monomials(2, 4)
    anchor = tuple(3 if m == (2, 2) else 0 for m in monos)
    return _normalize_sign(J, anchor)
