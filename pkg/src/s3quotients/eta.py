"""Eta invariant of the signature complex on S^3/Gamma, three ways.

* brute force: (1/|G|) sum_{g != 1} cot(r/2) cot(s/2) over the enumeration
* closed form: the cyclic formula in Hirzebruch-Jung data, and
  (2/3)(2m^2+1)/|G| - 1 + A for the non-cyclic U(2) families
* via quotient: signature theorem on CP^2_(1,1,2m)/G, which has G at one
  point and three cyclic singularities on a rational curve
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactnum import mod_inverse
from .groups import (
    GroupSpec,
    SpecError,
    _require_valid,
    cyclic_equivalent,
    element_array,
    identity_mask,
    is_free_array,
    order,
    require_noncyclic_u2,
    rotation_array,
)
from .hj import CyclicType, _expand


def eta_cyclic_closed(t: CyclicType) -> Fraction:
    """(1/3)(sum e_i + (q^{-1} + q)/p) - k."""
    if t.p < 2:
        raise SpecError("eta of L(q,p) needs p >= 2")
    q, p = t.q, t.p
    coeffs = _expand(q, p)
    return Fraction((sum(coeffs) - 3 * len(coeffs)) * p + mod_inverse(q, p) + q, 3 * p)


def cot_sum(rows: np.ndarray) -> float:
    """(1/N) sum over non-identity rows of cot(r/2) cot(s/2)."""
    r, s = rotation_array(rows)
    keep = ~identity_mask(rows)
    terms = 1.0 / (np.tan(r[keep] / 2) * np.tan(s[keep] / 2))
    return float(np.sum(terms) / len(rows))


def cyclic_cot_sum(q: int, p: int) -> float:
    """Brute-force eta of L(q,p) from the rotation numbers (2 pi j/p, 2 pi qj/p)
    of the powers of its generator."""
    j = np.arange(1, p)
    if np.any((q * j) % p == 0):
        raise SpecError(f"L({q},{p}) does not act freely")
    return float(np.sum(1.0 / (np.tan(np.pi * j / p) * np.tan(np.pi * ((q * j) % p) / p))) / p)


def cyclic_cot_sums(p: int) -> dict[int, float]:
    """cyclic_cot_sum(q, p) for every admissible q at once."""
    qs = np.array([q for q in range(1, p) if math.gcd(q, p) == 1])
    j = np.arange(1, p)
    a = 1.0 / np.tan(np.pi * j / p)
    b = 1.0 / np.tan(np.pi * ((qs[:, None] * j[None, :]) % p) / p)
    return dict(zip(qs.tolist(), ((b * a).sum(axis=1) / p).tolist()))


def eta_bruteforce(spec: GroupSpec) -> float:
    _require_valid(spec)
    if spec.family == "L":
        q, p = spec.params
        return 0.0 if p == 1 else cyclic_cot_sum(q, p)
    rows = element_array(spec)
    if not is_free_array(rows):
        raise SpecError(f"{spec} does not act freely on S^3")
    return cot_sum(rows)


# A_Gamma for the polyhedral families, keyed by m modulo |Gamma|/(4m).
# Signs are those produced by the quotient route and by the cotangent sum.
_A_TABLE = {
    "T": {1: Fraction(-4, 9), 5: Fraction(4, 9)},
    "O": {1: Fraction(-13, 18), 11: Fraction(13, 18), 5: Fraction(-5, 18), 7: Fraction(5, 18)},
    "I": {
        1: Fraction(-46, 45),
        29: Fraction(46, 45),
        7: Fraction(-2, 9),
        13: Fraction(-2, 9),
        17: Fraction(2, 9),
        23: Fraction(2, 9),
        11: Fraction(-26, 45),
        19: Fraction(26, 45),
    },
    "I3": {3: Fraction(0)},
}
_A_MODULUS = {"T": 6, "O": 12, "I": 30, "I3": 6}


def a_gamma(spec: GroupSpec) -> Fraction:
    """The constant A_Gamma of the non-cyclic U(2) eta formula."""
    require_noncyclic_u2(spec, "A_Gamma")
    m = spec.m
    if spec.family in ("D", "I2"):
        n = spec.n
        return -eta_cyclic_closed(CyclicType(m, n))
    table = _A_TABLE[spec.family]
    key = m % _A_MODULUS[spec.family]
    if key not in table:
        raise LookupError(f"no A_Gamma entry for {spec} (m = {key} mod {_A_MODULUS[spec.family]})")
    return table[key]


def eta_closed(spec: GroupSpec) -> Fraction:
    _require_valid(spec)
    if spec.is_cyclic:
        t = cyclic_equivalent(spec)
        return Fraction(0) if t.p == 1 else eta_cyclic_closed(t)
    if spec.reversed:
        return -eta_closed(spec.unreversed())
    m = spec.m
    return Fraction(2 * (2 * m * m + 1), 3 * order(spec)) - 1 + a_gamma(spec)


def eta_via_quotient(spec: GroupSpec) -> Fraction:
    """(1/|G~|)(2m^2+1)/(3m) - 1 - sum_i eta(L(q_i,p_i)), |G~| = |G|/(2m)."""
    from .topology import quotient_singularities

    require_noncyclic_u2(spec, "eta_via_quotient")
    m = spec.m
    tilde = Fraction(order(spec), 2 * m)
    sings = quotient_singularities(spec).curve_singularities
    return Fraction(2 * m * m + 1, 3 * m) / tilde - 1 - sum(eta_cyclic_closed(t) for t in sings)


@dataclass
class EtaReport:
    closed_form: Fraction
    brute_force: float | None = None
    via_quotient: Fraction | None = None
    a_gamma: Fraction | None = None


def eta_report(spec: GroupSpec, brute: bool = True) -> EtaReport:
    report = EtaReport(closed_form=eta_closed(spec))
    if brute:
        report.brute_force = eta_bruteforce(spec)
    if not spec.is_cyclic:
        base = spec.unreversed()
        report.a_gamma = a_gamma(base)
        if not spec.reversed:
            report.via_quotient = eta_via_quotient(spec)
    return report
