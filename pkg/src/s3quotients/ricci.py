"""The ALE Hitchin-Thorpe inequality on minimal resolutions of C^2/Gamma."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .eta import eta_closed
from .groups import GroupSpec, SpecError, _require_valid, cyclic_equivalent, order
from .hj import hj_length
from .topology import quotient_singularities


class Verdict(enum.Enum):
    VIOLATED = "Violated"
    EQUALITY = "Equality"
    STRICTLY_SATISFIED = "StrictlySatisfied"


HYPERKAHLER_NOTE = (
    "equality forces a hyperkahler ALE metric; these exist exactly for the "
    "SU(2) groups (Gibbons-Hawking, Kronheimer)"
)


@dataclass(frozen=True)
class HtVerdict:
    lhs: Fraction
    rhs: Fraction
    verdict: Verdict
    chi: int
    tau: int
    blowups: int
    annotation: str = ""


def _require_u2(spec: GroupSpec, what: str):
    _require_valid(spec)
    if spec.reversed:
        raise SpecError(f"{what} needs a subgroup of U(2); {spec} is orientation-reversed")


def chi_tau_minres(spec: GroupSpec) -> tuple[int, int]:
    """Euler characteristic and signature of the minimal resolution."""
    _require_u2(spec, "chi_tau_minres")
    if spec.is_cyclic:
        t = cyclic_equivalent(spec)
        tau = 0 if t.p == 1 else -hj_length(t)
    else:
        types = quotient_singularities(spec).reversed_types()
        tau = -1 - sum(hj_length(t) for t in types)
    return 1 - tau, tau


def ht_check(spec: GroupSpec, blowups: int = 0) -> HtVerdict:
    _require_u2(spec, "ht_check")
    if blowups < 0:
        raise SpecError("blowups must be non-negative")
    chi, tau = chi_tau_minres(spec)
    size = order(spec)
    eta = eta_closed(spec)
    lhs = Fraction(2 * ((chi + blowups) * size - 1), size)
    rhs = Fraction(3 * abs((tau - blowups) * eta.denominator - eta.numerator), eta.denominator)
    if lhs < rhs:
        verdict = Verdict.VIOLATED
    elif lhs == rhs:
        verdict = Verdict.EQUALITY
    else:
        verdict = Verdict.STRICTLY_SATISFIED
    note = HYPERKAHLER_NOTE if verdict is Verdict.EQUALITY else ""
    return HtVerdict(lhs, rhs, verdict, chi, tau, blowups, note)
