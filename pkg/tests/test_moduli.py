import math

import pytest

from s3quotients import (
    SpecError,
    compare_deformations,
    cyclic,
    d_max,
    dihedral,
    h1_dim_bruteforce,
    h1_dim_closed,
    h1_report,
    icosahedral,
    index_three,
    index_two,
    n_correction,
    octahedral,
    parse_spec,
    quotient_singularities,
    tetrahedral,
)
from s3quotients.hj import hj_length
from s3quotients.moduli import c_const, character_rho, character_sum, h1_dim_subgroup

FROZEN_H1 = {
    "D(3,2)": 4, "D(5,3)": 6, "D(5,4)": 4, "T(5)": 4, "T(7)": 4, "O(5)": 2, "O(7)": 2,
    "O(11)": 4, "I(7)": 2, "I(11)": 2, "I2(2,3)": 2, "I2(4,3)": 4, "I2(2,5)": 2,
    "I3(3)": 2, "I3(9)": 6,
}


@pytest.mark.parametrize("text,value", sorted(FROZEN_H1.items()))
def test_frozen_values(text, value):
    spec = parse_spec(text)
    assert h1_dim_closed(spec) == h1_dim_bruteforce(spec) == value


def test_su2_vanishing():
    for spec in (dihedral(1, 2), dihedral(1, 7), tetrahedral(1), octahedral(1), icosahedral(1)):
        assert h1_dim_closed(spec) == h1_dim_bruteforce(spec) == 0


def test_closed_form_examples():
    for m in range(3, 40, 2):
        for n in range(2, 10):
            if math.gcd(m, 2 * n) == 1 and m % n == 1:
                assert h1_dim_closed(dihedral(m, n)) == 4 * (m - 1) // n
    for m in (3, 9, 15, 21):
        assert h1_dim_closed(index_three(m)) == 2 * m // 3


def test_character_at_identity():
    for m in (2, 5, 9):
        assert character_rho(0.0, 0.0, m) == pytest.approx(4 * m - 4)
        assert character_rho(math.pi, math.pi, m) == pytest.approx(4 * m - 4)


@pytest.mark.parametrize("text", ["D(5,3)", "T(7)", "O(11)", "I(13)"])
def test_subgroup_average_agrees(text):
    spec = parse_spec(text)
    assert h1_dim_subgroup(spec) == h1_dim_bruteforce(spec)


@pytest.mark.parametrize("text", ["D(5,3)", "I2(4,3)", "I3(9)", "O(11)"])
def test_imaginary_part_vanishes(text):
    assert abs(character_sum(parse_spec(text)).imag) < 1e-6


def test_polyhedral_closed_forms_by_hand():
    # the per-family case formulas, evaluated directly
    for m in (5, 11, 17):
        assert h1_dim_closed(tetrahedral(m)) == 4 * (m + 1) // 6
    for m in (7, 13):
        assert h1_dim_closed(tetrahedral(m)) == 4 * (m - 1) // 6
    assert h1_dim_closed(octahedral(11)) == (11 + 1) // 3
    assert h1_dim_closed(octahedral(7)) == (7 - 1) // 3
    assert h1_dim_closed(icosahedral(29)) == 2 * (29 + 1) // 15
    assert h1_dim_closed(icosahedral(19)) == 2 * (19 - 4) // 15


def test_c_table():
    assert c_const(tetrahedral(5)) == 4 and c_const(tetrahedral(7)) == 8
    assert c_const(octahedral(5)) == 6 and c_const(icosahedral(17)) == 4
    assert c_const(icosahedral(11)) == 6 and c_const(icosahedral(31)) == 8
    assert c_const(index_two(4, 3)) == 8 and c_const(index_two(2, 3)) == 6


def test_d_max_examples():
    assert d_max(cyclic(1, 2)) == 0
    for p in range(2, 30):
        assert d_max(cyclic(1, p)) == 2 * p - 4
        assert d_max(cyclic(p - 1, p)) == 3 * (p - 2)
    # three all-2 strings of lengths 1, 2, 2 on a -2 central curve
    assert d_max(tetrahedral(1)) == (4 - 1) + 2 * (8 - 2) + 4 - 4
    with pytest.raises(SpecError):
        d_max(tetrahedral(1, reversed=True))


def test_comparison_su2_is_equality():
    for p in range(2, 40):
        rep = compare_deformations(cyclic(p - 1, p))
        assert rep.difference == 0 and rep.d_max == 3 * (p - 2)
    for spec in (dihedral(1, 2), dihedral(1, 9), tetrahedral(1), octahedral(1), icosahedral(1)):
        assert compare_deformations(spec).difference == 0


def test_comparison_strict_off_su2():
    for text in FROZEN_H1:
        assert compare_deformations(parse_spec(text)).difference > 0
    rep = compare_deformations(cyclic(2, 7))
    assert rep.difference > 0 and rep.h0_used == 2 and rep.warnings
    assert compare_deformations(cyclic(1, 7)).h0_used == 4
    assert compare_deformations(cyclic(2, 7), h0=0).warnings == []


@pytest.mark.parametrize("text", ["D(3,2)", "D(1,3)", "T(5)", "O(7)", "I(11)", "I2(2,5)", "I3(9)"])
def test_resolution_h1_against_index(text):
    # the minimal-resolution compactification has H^0 = 1 and H^2 = 0, so
    # dim H^1 = 1 - index with index -7 * (number of exceptional curves) + 8 + N
    spec = parse_spec(text)
    curves = sum(hj_length(t) for t in quotient_singularities(spec).reversed_types())
    index = -7 * curves + 8 + n_correction(spec)
    rep = compare_deformations(spec)
    assert rep.h1_resolution == 1 - index


def test_report_has_both_routes():
    rep = h1_report(index_three(9))
    assert rep.h1_closed == rep.h1_brute == 6 and rep.c_const == 6
    with pytest.raises(SpecError):
        h1_report(cyclic(1, 5))
