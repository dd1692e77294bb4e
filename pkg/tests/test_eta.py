import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import u2_matrix
from s3quotients import (
    SpecError,
    cyclic,
    dihedral,
    eta_bruteforce,
    eta_closed,
    eta_cyclic_closed,
    eta_report,
    eta_via_quotient,
    icosahedral,
    index_two,
    parse_spec,
    reverse,
    tetrahedral,
)
from s3quotients.eta import a_gamma, cot_sum, cyclic_cot_sum
from s3quotients.groups import GroupSpec, element_array
from s3quotients.hj import CyclicType

# Frozen from the brute-force cotangent sum (limit_denominator of the float).
FROZEN = {
    "D(1,2)": Fraction(-3, 4),
    "D(3,2)": Fraction(-17, 36),
    "D(1,3)": Fraction(-19, 18),
    "D(5,3)": Fraction(-19, 90),
    "D(5,4)": Fraction(-43, 40),
    "T(1)": Fraction(-49, 36),
    "T(5)": Fraction(-49, 180),
    "T(7)": Fraction(-265, 252),
    "O(1)": Fraction(-121, 72),
    "O(5)": Fraction(-409, 360),
    "O(7)": Fraction(-265, 504),
    "O(11)": Fraction(23, 792),
    "I(1)": Fraction(-361, 180),
    "I(7)": Fraction(-1441, 1260),
    "I(11)": Fraction(-2881, 1980),
    "I2(2,3)": Fraction(-19, 36),
    "I2(4,3)": Fraction(-55, 72),
    "I2(2,5)": Fraction(-17, 20),
    "I3(3)": Fraction(-89, 108),
    "I3(9)": Fraction(-161, 324),
    "D(1,1)": Fraction(-1, 2),
    "I2(2,1)": Fraction(-1, 4),
}


@pytest.mark.parametrize("text,value", sorted(FROZEN.items()))
def test_frozen_values(text, value):
    spec = parse_spec(text)
    assert eta_closed(spec) == value
    assert eta_bruteforce(spec) == pytest.approx(float(value), abs=1e-9)
    assert eta_closed(reverse(spec)) == -value
    assert eta_bruteforce(reverse(spec)) == pytest.approx(-float(value), abs=1e-9)
    if not spec.is_cyclic:
        assert eta_via_quotient(spec) == value


def test_cyclic_examples():
    assert eta_cyclic_closed(CyclicType(1, 2)) == 0
    assert eta_cyclic_closed(CyclicType(1, 4)) == Fraction(1, 2)
    assert eta_cyclic_closed(CyclicType(2, 3)) == Fraction(-2, 9)
    assert eta_bruteforce(cyclic(1, 3)) == pytest.approx(2 / 9)
    assert eta_bruteforce(cyclic(1, 2)) == pytest.approx(0, abs=1e-15)
    for m in range(1, 30):
        assert eta_cyclic_closed(CyclicType(1, 2 * m)) == Fraction(2 * m * m + 1, 3 * m) - 1
    with pytest.raises(SpecError):
        eta_cyclic_closed(CyclicType(0, 1))


def test_n_equals_one_members_are_lens_spaces():
    for m in (1, 3, 5, 7):
        assert eta_closed(dihedral(m, 1)) == eta_cyclic_closed(CyclicType(2 * m + 1, 4 * m))
    for m in (2, 4, 6):
        assert eta_closed(index_two(m, 1)) == eta_cyclic_closed(CyclicType(2 * m + 1, 4 * m))
        assert eta_bruteforce(index_two(m, 1)) == pytest.approx(float(eta_closed(index_two(m, 1))), abs=1e-9)


def test_cyclic_reversal_antisymmetry():
    for p in range(2, 201):
        for q in range(1, p):
            if math.gcd(q, p) == 1:
                assert eta_cyclic_closed(CyclicType(p - q, p)) == -eta_cyclic_closed(CyclicType(q, p))


def test_tetrahedral_quotient_route_by_hand():
    for m in (1, 5, 7, 11):
        by_hand = Fraction(1, 12) * Fraction(2 * m * m + 1, 3 * m) - 1 - 0 - 2 * eta_cyclic_closed(CyclicType(m, 3))
        assert eta_via_quotient(tetrahedral(m)) == by_hand == eta_closed(tetrahedral(m))


def test_a_gamma_entries():
    # sign convention fixed by the cotangent sum, see T(1) above
    assert a_gamma(tetrahedral(1)) == Fraction(-4, 9)
    assert a_gamma(icosahedral(11)) == Fraction(-26, 45)
    assert a_gamma(icosahedral(19)) == Fraction(26, 45)
    assert a_gamma(dihedral(5, 3)) == -eta_cyclic_closed(CyclicType(2, 3))
    m = 11
    assert eta_closed(icosahedral(m)) == Fraction(2 * (2 * m * m + 1), 3 * 120 * m) - 1 - Fraction(26, 45)


def test_matrix_cotangent_sum(small_u2_specs):
    # eigenvalue arguments of the 2x2 complex matrix are the rotation numbers
    for spec in small_u2_specs:
        total = 0.0
        rows = element_array(spec)
        for row in rows:
            ev = np.linalg.eigvals(u2_matrix(row[:4], row[4:]))
            if np.allclose(ev, 1):
                continue
            th = np.angle(ev)
            total += 1 / (np.tan(th[0] / 2) * np.tan(th[1] / 2))
        assert total / len(rows) == pytest.approx(eta_bruteforce(spec), abs=1e-9)


@given(st.integers(0, 2**32 - 1), st.sampled_from(["T(5)", "D(5,3)", "I2(4,3)", "I3(3)", "~O(5)"]))
@settings(max_examples=25, deadline=None)
def test_representative_independence(seed, text):
    rows = np.array(element_array(parse_spec(text)))
    signs = np.random.default_rng(seed).choice([-1.0, 1.0], size=len(rows))
    assert abs(cot_sum(rows * signs[:, None]) - cot_sum(rows)) < 1e-12


@given(st.integers(2, 120), st.data())
@settings(max_examples=80, deadline=None)
def test_cyclic_closed_matches_cotangent_sum(p, data):
    q = data.draw(st.integers(1, p - 1).filter(lambda q: math.gcd(q, p) == 1))
    assert float(eta_cyclic_closed(CyclicType(q, p))) == pytest.approx(cyclic_cot_sum(q, p), abs=1e-9)


def test_report_fields():
    rep = eta_report(tetrahedral(5))
    assert rep.closed_form == rep.via_quotient == Fraction(-49, 180)
    assert rep.a_gamma == Fraction(4, 9)
    rep = eta_report(cyclic(1, 4))
    assert rep.via_quotient is None and rep.a_gamma is None


def test_rejects_non_free():
    with pytest.raises(SpecError):
        eta_bruteforce(GroupSpec("T", (3,)))
    with pytest.raises(SpecError):
        eta_via_quotient(cyclic(1, 5))
    with pytest.raises(SpecError):
        eta_via_quotient(tetrahedral(1, reversed=True))
