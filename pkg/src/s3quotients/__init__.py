"""Eta invariants, index correction terms and deformation counts for
spherical space forms S^3/Gamma with Gamma a finite subgroup of SO(4).

Every closed formula is exact (``fractions.Fraction``); every closed formula
has a brute-force counterpart computed from an explicit enumeration of the
group as pairs of unit quaternions.
"""

from .exactnum import Rational, eisenstein_lhs, gcd, mod_inverse, sawtooth
from .hj import CyclicType, HJString, hj_expand, hj_length
from .groups import (
    GroupElement,
    GroupSpec,
    SpecError,
    cyclic,
    dihedral,
    eigenangle_histogram,
    enumerate_group,
    generators,
    icosahedral,
    index_three,
    index_two,
    is_free_on_s3,
    is_in_su2,
    octahedral,
    order,
    parse_spec,
    reverse,
    rotation_numbers,
    tetrahedral,
    validate,
)
from .eta import EtaReport, eta_bruteforce, eta_closed, eta_cyclic_closed, eta_report, eta_via_quotient
from .index import (
    IndexReport,
    Variant,
    b_gamma,
    index_report,
    n_correction,
    n_cyclic,
    n_via_correction_formula,
    orbifold_index,
)
from .moduli import ModuliReport, compare_deformations, d_max, h1_dim_bruteforce, h1_dim_closed, h1_report
from .ricci import HtVerdict, Verdict, chi_tau_minres, ht_check
from .topology import SingularitySet, ell, quotient_singularities, signature_bookkeeping

__all__ = [
    "Rational",
    "eisenstein_lhs",
    "gcd",
    "mod_inverse",
    "sawtooth",
    "CyclicType",
    "HJString",
    "hj_expand",
    "hj_length",
    "GroupElement",
    "GroupSpec",
    "SpecError",
    "cyclic",
    "dihedral",
    "eigenangle_histogram",
    "enumerate_group",
    "generators",
    "icosahedral",
    "index_three",
    "index_two",
    "is_free_on_s3",
    "is_in_su2",
    "octahedral",
    "order",
    "parse_spec",
    "reverse",
    "rotation_numbers",
    "tetrahedral",
    "validate",
    "EtaReport",
    "eta_bruteforce",
    "eta_closed",
    "eta_cyclic_closed",
    "eta_report",
    "eta_via_quotient",
    "IndexReport",
    "Variant",
    "b_gamma",
    "index_report",
    "n_correction",
    "n_cyclic",
    "n_via_correction_formula",
    "orbifold_index",
    "ModuliReport",
    "compare_deformations",
    "d_max",
    "h1_dim_bruteforce",
    "h1_dim_closed",
    "h1_report",
    "HtVerdict",
    "Verdict",
    "chi_tau_minres",
    "ht_check",
    "SingularitySet",
    "ell",
    "quotient_singularities",
    "signature_bookkeeping",
]

__version__ = "0.1.0"
