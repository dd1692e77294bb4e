import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from s3quotients.hj import CyclicType, hj_expand, hj_length


@pytest.mark.parametrize("q,p,string", [
    (1, 2, (2,)),
    (1, 5, (5,)),
    (4, 5, (2, 2, 2, 2)),
    (2, 5, (3, 2)),
    (3, 5, (2, 3)),
    (2, 7, (4, 2)),
    (3, 7, (3, 2, 2)),
    (5, 12, (3, 2, 3)),
    (9, 4 * 4, (2, 5, 2)),
])
def test_known_strings(q, p, string):
    assert hj_expand(CyclicType(q, p)).coefficients == string


@st.composite
def lens(draw, max_p=500):
    p = draw(st.integers(2, max_p))
    q = draw(st.integers(1, p - 1).filter(lambda q: math.gcd(q, p) == 1))
    return CyclicType(q, p)


@given(lens())
def test_continued_fraction_reconstructs(t):
    s = hj_expand(t)
    assert s.continued_fraction() == Fraction(t.p, t.q)
    assert all(e >= 2 for e in s.coefficients)


@given(lens())
def test_reversed_string_is_riemenschneider_dual(t):
    # Riemenschneider duality: sum(e_i - 1) = sum(e'_j - 1) = k + k' - 1
    a, b = hj_expand(t), hj_expand(t.reversed())
    assert a.total - a.length == b.total - b.length == a.length + b.length - 1


def test_inverse_q_reverses_string():
    for p in range(3, 60):
        for q in range(1, p):
            if math.gcd(q, p) == 1:
                qi = pow(q, -1, p)
                assert hj_expand(CyclicType(qi, p)).coefficients == hj_expand(CyclicType(q, p)).coefficients[::-1]


def test_reduction_and_errors():
    assert CyclicType(7, 5) == CyclicType(2, 5)
    assert str(CyclicType(-1, 5)) == "L(4,5)"
    with pytest.raises(ValueError):
        CyclicType(2, 4)
    with pytest.raises(ValueError):
        CyclicType(5, 5)
    with pytest.raises(ValueError):
        hj_length(CyclicType(0, 1))
