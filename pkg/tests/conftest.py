import numpy as np
import pytest


def hamilton(a, b):
    """Reference Hamilton product, written out independently of the library."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return np.array([
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ])


def conj(q):
    return np.array([q[0], -q[1], -q[2], -q[3]])


def u2_matrix(left, right):
    """2x2 complex matrix of h -> left h conj(right), with h = z1 + z2 j.

    Requires left complex, so the map is C-linear for the left structure."""
    def to_c2(q):
        return np.array([q[0] + 1j * q[1], q[2] + 1j * q[3]])

    cols = []
    for basis in (np.array([1.0, 0, 0, 0]), np.array([0, 0, 1.0, 0])):
        cols.append(to_c2(hamilton(hamilton(left, basis), conj(right))))
    return np.array(cols).T


@pytest.fixture
def small_u2_specs():
    from s3quotients import parse_spec

    return [parse_spec(s) for s in (
        "L(1,2)", "L(2,5)", "L(3,7)", "D(1,2)", "D(3,2)", "D(5,3)", "T(1)", "T(5)",
        "O(1)", "O(5)", "I(1)", "I(7)", "I2(2,3)", "I2(4,3)", "I3(3)", "I3(9)",
    )]
