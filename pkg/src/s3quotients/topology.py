"""Quotient singularities of CP^2_(1,1,2m)/Gamma and the connected-sum
counts l_i(m, n) for self-dual metrics on l # CP^2."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .groups import GroupSpec, SpecError, dihedral, index_two, require_noncyclic_u2
from .hj import CyclicType, hj_length


@dataclass(frozen=True)
class SingularitySet:
    compactification_group: GroupSpec
    curve_singularities: tuple[CyclicType, CyclicType, CyclicType]

    def reversed_types(self) -> tuple[CyclicType, ...]:
        """L(p_i - q_i, p_i): the strings hanging off the central curve."""
        return tuple(t.reversed() for t in self.curve_singularities)


def quotient_singularities(spec: GroupSpec) -> SingularitySet:
    """The three cyclic points on the rational curve z_2 = 0 of the quotient."""
    require_noncyclic_u2(spec, "quotient_singularities")
    m = spec.m
    f = spec.family
    if f in ("D", "I2"):
        types = (CyclicType(1, 2), CyclicType(1, 2), CyclicType(m, spec.n))
    elif f == "T":
        types = (CyclicType(1, 2), CyclicType(m, 3), CyclicType(m, 3))
    elif f == "O":
        types = (CyclicType(1, 2), CyclicType(m, 3), CyclicType(m, 4))
    elif f == "I":
        types = (CyclicType(1, 2), CyclicType(m, 3), CyclicType(m, 5))
    elif f == "I3":
        types = (CyclicType(1, 2), CyclicType(1, 3), CyclicType(2, 3))
    else:
        raise SpecError(f"no quotient data for {spec}")
    return SingularitySet(spec, types)


def _check_ell_params(family_index: int, m: int, n: int):
    if family_index == 1:
        ok = m >= 1 and n >= 1 and math.gcd(m, 2 * n) == 1
    elif family_index == 2:
        # m = 1 is excluded by the parity condition
        ok = m >= 2 and n >= 1 and m % 2 == 0 and math.gcd(m, n) == 1
    else:
        raise SpecError(f"family index must be 1 or 2, got {family_index}")
    if not ok:
        raise SpecError(f"invalid parameters for l_{family_index}: m={m}, n={n}")


def _k(q: int, p: int) -> int:
    return hj_length(CyclicType(q, p))


PI1_METADATA = {
    "pi1_X": "Z/2Z",
    "pi1_connected_sum": "trivial",
    "homeomorphic_to": "l # CP^2",
}


@dataclass(frozen=True)
class EllResult:
    value: int
    family_index: int
    m: int
    n: int
    metadata: dict = field(default_factory=lambda: dict(PI1_METADATA))


def ell(family_index: int, m: int, n: int) -> int:
    """Number of CP^2 summands, l_i(m, n)."""
    _check_ell_params(family_index, m, n)
    if m > 1 and n > 1:
        return 3 + _k(n - m, n) + _k(m - n, m)
    if m > 1:
        return 3 + (m - 1)
    if n > 1:
        return 3 + (n - 1)
    return 3


def ell_report(family_index: int, m: int, n: int) -> EllResult:
    return EllResult(ell(family_index, m, n), family_index, m, n)


def signature_bookkeeping(family_index: int, m: int, n: int) -> tuple[int, int]:
    """(tau(X_i), tau(Y_i)) with X_i the ALE space at the reversed group and
    Y_i the scalar-flat Kahler minimal resolution of C^2/Gamma_i."""
    from .ricci import chi_tau_minres

    _check_ell_params(family_index, m, n)
    tau_x = -_k(m - n, m) if m > 1 else 0
    spec = dihedral(m, n) if family_index == 1 else index_two(m, n)
    _, tau_y = chi_tau_minres(spec)
    return tau_x, tau_y
