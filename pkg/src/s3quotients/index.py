"""Orbifold correction terms N(Gamma) of the self-dual deformation index

    Ind = (15 chi - 29 tau)/2 + sum N(Gamma_i).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .groups import (
    GroupSpec,
    SpecError,
    _require_valid,
    cyclic_equivalent,
    is_in_su2,
    order,
    poly_index,
    require_noncyclic_u2,
)
from .hj import CyclicType, _expand


class Variant(enum.Enum):
    """Constant subtracted for reversed groups whose conjugate lies in SU(2):
    6 under THEOREM (the default), 5 under LEMMA. The two normalisations
    disagree and neither is derived here."""

    THEOREM = "theorem"
    LEMMA = "lemma"


VARIANT_WARNING = (
    "reversed SU(2) conjugate: the reversal constant is 6 under the theorem "
    "variant and 5 under the lemma variant; value computed with the {} variant"
)


def n_cyclic(t: CyclicType) -> int:
    if t.p < 2:
        raise SpecError("N(L(q,p)) needs p >= 2")
    if t.q == 1:
        return 4 - 4 * t.p
    coeffs = _expand(t.q, t.p)
    return -4 * sum(coeffs) + 12 * len(coeffs) - 10


def b_gamma(spec: GroupSpec) -> int:
    """Minus the self-intersection of the central curve of the minimal
    resolution of C^2/Gamma: 2 + (4m/|G|)(m - (m mod |G|/4m))."""
    require_noncyclic_u2(spec, "b_gamma")
    m = spec.m
    r = poly_index(spec)
    value = 2 + Fraction(4 * m, order(spec)) * (m - m % r)
    assert value.denominator == 1
    return int(value)


_B_TABLE = {
    "T": {5: 5, 1: 21},
    "O": {11: 1, 7: 9, 5: 17, 1: 25},
    "I": {29: -3, 19: 5, 17: 9, 23: 9, 7: 17, 13: 17, 11: 21, 1: 29},
    "I3": {3: 13},
}
_B_MODULUS = {"T": 6, "O": 12, "I": 30, "I3": 6}


def b_const(spec: GroupSpec) -> int:
    require_noncyclic_u2(spec, "B_Gamma")
    m = spec.m
    if spec.family in ("D", "I2"):
        n = spec.n
        if m % n == 1:
            return 5 + 4 * n
        return 7 - n_cyclic(CyclicType(m, n))
    key = m % _B_MODULUS[spec.family]
    table = _B_TABLE[spec.family]
    if key not in table:
        raise LookupError(f"no B_Gamma entry for {spec} (m = {key} mod {_B_MODULUS[spec.family]})")
    return table[key]


def reversal_constant(conjugate: GroupSpec, variant: Variant = Variant.THEOREM) -> int:
    if is_in_su2(conjugate):
        return 6 if variant is Variant.THEOREM else 5
    return 7


def n_correction(spec: GroupSpec, variant: Variant = Variant.THEOREM) -> int:
    _require_valid(spec)
    if spec.is_cyclic:
        return n_cyclic(cyclic_equivalent(spec))
    if spec.reversed:
        base = spec.unreversed()
        return -n_correction(base) - reversal_constant(base, variant)
    return -4 * b_gamma(spec) + b_const(spec)


def n_via_correction_formula(spec: GroupSpec) -> int:
    """-7 - dim H^1 - sum N(L(q_i,p_i)) on CP^2_(1,1,2m)/Gamma, with dim H^1
    from the character sum."""
    from .moduli import h1_dim_bruteforce
    from .topology import quotient_singularities

    require_noncyclic_u2(spec, "n_via_correction_formula")
    sings = quotient_singularities(spec).curve_singularities
    return -7 - h1_dim_bruteforce(spec) - sum(n_cyclic(t) for t in sings)


def orbifold_index(chi: int, tau: int, groups: list[GroupSpec], variant: Variant = Variant.THEOREM) -> int:
    top = 15 * chi - 29 * tau
    if top % 2:
        raise SpecError(f"15*chi - 29*tau = {top} is odd")
    return top // 2 + sum(n_correction(g, variant) for g in groups)


@dataclass
class IndexReport:
    n_value: int
    variant_used: Variant
    b_gamma: int | None = None
    b_const: int | None = None
    oracle_value: int | None = None
    warnings: list[str] = field(default_factory=list)


def index_report(spec: GroupSpec, variant: Variant = Variant.THEOREM, oracle: bool = True) -> IndexReport:
    report = IndexReport(n_value=n_correction(spec, variant), variant_used=variant)
    if spec.is_cyclic:
        return report
    base = spec.unreversed()
    report.b_gamma = b_gamma(base)
    report.b_const = b_const(base)
    if spec.reversed:
        if is_in_su2(base):
            report.warnings.append(VARIANT_WARNING.format(variant.value))
    elif oracle:
        report.oracle_value = n_via_correction_formula(spec)
    return report
