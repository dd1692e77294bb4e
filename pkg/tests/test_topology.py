import math
from fractions import Fraction

import pytest

from s3quotients import (
    SpecError,
    cyclic,
    dihedral,
    ell,
    icosahedral,
    index_three,
    index_two,
    octahedral,
    order,
    quotient_singularities,
    signature_bookkeeping,
    tetrahedral,
)
from s3quotients.hj import CyclicType
from s3quotients.topology import ell_report


def test_singularity_table():
    assert quotient_singularities(tetrahedral(1)).curve_singularities == (
        CyclicType(1, 2), CyclicType(1, 3), CyclicType(1, 3))
    for m in (5, 7, 11, 13):
        assert quotient_singularities(octahedral(m)).curve_singularities == (
            CyclicType(1, 2), CyclicType(m % 3, 3), CyclicType(m % 4, 4))
    assert quotient_singularities(index_three(9)).curve_singularities == (
        CyclicType(1, 2), CyclicType(1, 3), CyclicType(2, 3))
    assert quotient_singularities(index_two(4, 3)).curve_singularities[2] == CyclicType(1, 3)
    with pytest.raises(SpecError):
        quotient_singularities(cyclic(1, 3))
    with pytest.raises(SpecError):
        quotient_singularities(dihedral(3, 2, reversed=True))


@pytest.mark.parametrize("spec", [dihedral(3, 2), dihedral(5, 7), tetrahedral(5), octahedral(7),
                                  icosahedral(7), index_two(4, 3), index_three(3)], ids=str)
def test_covering_degree_relation(spec):
    # three cone points on the orbifold sphere of the image group G~ = G/L(1,2m)
    ps = [t.p for t in quotient_singularities(spec).curve_singularities]
    tilde = Fraction(order(spec), 2 * spec.m)
    assert sum(Fraction(1, p) for p in ps) - 1 == Fraction(2) / tilde


def test_ell_values():
    assert ell(1, 1, 1) == 3
    assert ell(1, 1, 2) == 4
    assert ell(2, 2, 1) == 4
    assert ell(1, 5, 1) == 3 + 4
    assert ell(1, 1, 6) == 3 + 5
    assert ell(1, 5, 3) == 3 + 1 + 2
    rep = ell_report(1, 1, 1)
    assert rep.value == 3 and rep.metadata["pi1_X"] == "Z/2Z"


def test_signature_bookkeeping():
    assert signature_bookkeeping(2, 2, 1) == (-1, -3)
    assert signature_bookkeeping(1, 1, 1)[0] == 0
    for i in (1, 2):
        for m in range(1, 31):
            for n in range(1, 31):
                ok = math.gcd(m, 2 * n) == 1 if i == 1 else (m % 2 == 0 and math.gcd(m, n) == 1)
                if ok:
                    tx, ty = signature_bookkeeping(i, m, n)
                    assert -tx - ty == ell(i, m, n) >= 3


@pytest.mark.parametrize("args", [(1, 3, 3), (1, 2, 1), (2, 1, 1), (2, 3, 1), (2, 4, 2), (3, 1, 1)])
def test_ell_rejects(args):
    with pytest.raises(SpecError):
        ell(*args)
