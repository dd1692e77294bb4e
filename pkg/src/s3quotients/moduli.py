"""First cohomology of the self-dual deformation complex on quotients of
CP^2_(1,1,2m) by non-cyclic U(2) groups, and the comparison with the
scalar-flat Kahler deformations of the minimal resolution."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .groups import (
    GroupSpec,
    SpecError,
    _require_valid,
    binary_polyhedral,
    cyclic_equivalent,
    element_array,
    poly_index,
    require_noncyclic_u2,
    u2_eigenangle_array,
)
from .hj import CyclicType, _expand
from .index import b_gamma
from .topology import quotient_singularities

INTEGRALITY_TOL = 1e-6
IMAG_TOL = 1e-6


def c_const(spec: GroupSpec) -> int:
    require_noncyclic_u2(spec, "C_Gamma")
    m = spec.m
    f = spec.family
    if f in ("D", "I2"):
        return 8 if m % spec.n == 1 else 6
    if f in ("T", "O", "I3"):
        r = poly_index(spec)
        if m % r == 1:
            return 8
        if m % r == r - 1:
            return 4
        return 6
    if f == "I":
        key = m % 30
        if key == 1:
            return 8
        if key in (17, 23, 29):
            return 4
        if key in (7, 11, 13, 19):
            return 6
        raise LookupError(f"no C_Gamma entry for {spec} (m = {key} mod 30)")
    raise SpecError(f"no C_Gamma for {spec}")


def h1_dim_closed(spec: GroupSpec) -> int:
    require_noncyclic_u2(spec, "h1_dim_closed")
    return 4 * b_gamma(spec) - c_const(spec)


def character_rho(theta1: np.ndarray, theta2: np.ndarray, m: int) -> np.ndarray:
    """chi_rho on elements with U(2) eigenvalue arguments (theta1, theta2),
    rho = S^{2m-2} (x) det  +  S^{2m-4} (x) det^2."""
    theta1 = np.asarray(theta1, dtype=float)
    theta2 = np.asarray(theta2, dtype=float)
    total = np.zeros(theta1.shape, dtype=complex)
    for deg, twist in ((2 * m - 2, 1), (2 * m - 4, 2)):
        if deg < 0:
            continue
        p = np.arange(deg + 1)
        phase = (deg - p) * theta1[..., None] + p * theta2[..., None]
        total += np.exp(1j * twist * (theta1 + theta2)) * np.exp(1j * phase).sum(axis=-1)
    return total


def _average(theta1: np.ndarray, theta2: np.ndarray, m: int) -> int:
    chars = character_rho(theta1, theta2, m)
    s = chars.sum()
    if abs(s.imag) / len(chars) > IMAG_TOL:
        raise ArithmeticError(f"character sum has imaginary part {s.imag}")
    value = 2 * s.real / len(chars)
    rounded = round(value)
    if abs(value - rounded) > INTEGRALITY_TOL:
        raise ArithmeticError(f"character average {value} is not an integer")
    return int(rounded)


def character_sum(spec: GroupSpec) -> complex:
    """Sum of chi_rho over the enumerated group."""
    require_noncyclic_u2(spec, "character_sum")
    t1, t2 = u2_eigenangle_array(element_array(spec))
    return complex(character_rho(t1, t2, spec.m).sum())


def h1_dim_bruteforce(spec: GroupSpec) -> int:
    require_noncyclic_u2(spec, "h1_dim_bruteforce")
    if spec.m == 1:
        return 0
    t1, t2 = u2_eigenangle_array(element_array(spec))
    return _average(t1, t2, spec.m)


def h1_dim_subgroup(spec: GroupSpec) -> int:
    """The same dimension averaged over the binary polyhedral factor alone,
    which has the same effective action for the product families."""
    require_noncyclic_u2(spec, "h1_dim_subgroup")
    if spec.family not in ("D", "T", "O", "I"):
        raise SpecError(f"{spec} is not a product group")
    if spec.m == 1:
        return 0
    quats = binary_polyhedral(spec.family, spec.n if spec.family == "D" else 0)
    beta = np.arctan2(np.linalg.norm(quats[:, 1:], axis=1), quats[:, 0])
    return _average(-beta, beta, spec.m)


def _string_sums(t: CyclicType) -> tuple[int, int]:
    coeffs = _expand(t.q, t.p)
    return sum(coeffs), len(coeffs)


def d_max(spec: GroupSpec) -> int:
    """Dimension bound for scalar-flat Kahler deformations of the minimal
    resolution of C^2/Gamma."""
    _require_valid(spec)
    if spec.reversed:
        raise SpecError(f"d_max needs a subgroup of U(2); {spec} is orientation-reversed")
    if spec.is_cyclic:
        t = cyclic_equivalent(spec)
        if t.p < 2:
            raise SpecError("d_max of the trivial group is undefined")
        e, k = _string_sums(t)
        return 2 * e - k - 3
    total = 2 * b_gamma(spec) - 4
    for t in quotient_singularities(spec).reversed_types():
        e, k = _string_sums(t)
        total += 2 * e - k
    return total


def default_h0(t: CyclicType) -> int:
    # U(2)-invariant metrics when q = 1, toric otherwise
    return 4 if t.q == 1 else 2


def h1_resolution(spec: GroupSpec, h0: int | None = None) -> tuple[int, int | None]:
    """dim H^1 of the self-dual complex on the compactified minimal resolution,
    and the H^0 value it used (None for non-cyclic groups)."""
    if spec.is_cyclic:
        t = cyclic_equivalent(spec)
        if t.p < 2:
            raise SpecError("the trivial group has no resolution")
        h0 = default_h0(t) if h0 is None else h0
        e, k = _string_sums(t)
        kappa = 1 if t.q == 1 else 0
        return h0 + 4 * e - 5 * k - 5 - 2 * kappa, h0
    require_noncyclic_u2(spec, "h1_resolution")
    total = 4 * b_gamma(spec) - c_const(spec)
    kappa = 0
    for sing in quotient_singularities(spec).curve_singularities:
        e, k = _string_sums(sing.reversed())
        total += 4 * e - 5 * k
        # a curve point of type L(q,p), q != 1, blows up into non-(-1)-ends
        kappa += sing.q != 1
    return total - 2 * kappa, None


@dataclass
class ModuliReport:
    d_max: int
    h1_resolution: int
    difference: int
    h0_used: int | None = None
    h1_closed: int | None = None
    h1_brute: int | None = None
    c_const: int | None = None
    warnings: list[str] = field(default_factory=list)


H0_WARNING = "cyclic case: dim H^0 = {} is an assumed default, not a derived value"


def compare_deformations(spec: GroupSpec, h0: int | None = None) -> ModuliReport:
    _require_valid(spec)
    if spec.reversed:
        raise SpecError(f"compare_deformations needs a subgroup of U(2); {spec} is orientation-reversed")
    dm = d_max(spec)
    h1, h0_used = h1_resolution(spec, h0)
    report = ModuliReport(d_max=dm, h1_resolution=h1, difference=h1 - dm, h0_used=h0_used)
    if spec.is_cyclic:
        if h0 is None:
            report.warnings.append(H0_WARNING.format(h0_used))
    else:
        report.h1_closed = h1_dim_closed(spec)
        report.c_const = c_const(spec)
    return report


def h1_report(spec: GroupSpec, brute: bool = True) -> ModuliReport:
    """Closed and brute-force dim H^1 on the weighted projective quotient,
    together with the deformation comparison."""
    require_noncyclic_u2(spec, "h1_report")
    report = compare_deformations(spec)
    if brute:
        report.h1_brute = h1_dim_bruteforce(spec)
    return report
