"""Exact rationals and the small number-theoretic helpers the formulas use."""

from __future__ import annotations

import math
from fractions import Fraction

# Arbitrary-precision, always reduced, positive denominator.
Rational = Fraction


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def mod_inverse(q: int, p: int) -> int:
    """Return r in [1, p) with q*r = 1 (mod p)."""
    if p < 2:
        raise ValueError(f"modulus must be >= 2, got {p}")
    if math.gcd(q, p) != 1:
        raise ValueError(f"{q} is not invertible modulo {p}")
    return pow(q, -1, p)


def sawtooth(x: Fraction | int) -> Fraction:
    """((x)) = x - floor(x) - 1/2 off the integers, 0 on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def eisenstein_lhs(n: int, k: int) -> float:
    """Floating-point sum_{j=1}^{n-1} sin(2 pi k j / n) cot(pi j / n).

    By Eisenstein this equals -2n ((k/n)).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0.0
    for j in range(1, n):
        total += math.sin(2 * math.pi * k * j / n) / math.tan(math.pi * j / n)
    return total
