"""Hirzebruch-Jung strings of cyclic quotient singularities C^2/L(q,p)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@dataclass(frozen=True, order=True)
class CyclicType:
    """The lens-space label L(q, p): the cyclic group of order p generated by
    diag(exp(2 pi i/p), exp(2 pi i q/p)).

    ``q`` is reduced into [1, p) on construction; p = 1 is the trivial group.
    """

    q: int
    p: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"L(q,p) needs p >= 1, got p={self.p}")
        q = self.q % self.p
        if self.p >= 2:
            if q == 0:
                raise ValueError(f"L({self.q},{self.p}): q is 0 mod p")
            if math.gcd(q, self.p) != 1:
                raise ValueError(f"L({self.q},{self.p}): gcd(q,p) != 1")
        object.__setattr__(self, "q", q)

    def reversed(self) -> "CyclicType":
        """L(p-q, p), the orientation-reversed type."""
        if self.p == 1:
            return self
        return CyclicType(self.p - self.q, self.p)

    def __str__(self):
        return f"L({self.q},{self.p})"


@dataclass(frozen=True)
class HJString:
    coefficients: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.coefficients)

    @property
    def total(self) -> int:
        """Sum of the self-intersection numbers e_i."""
        return sum(self.coefficients)

    def continued_fraction(self) -> Fraction:
        """e_1 - 1/(e_2 - 1/(... - 1/e_k))."""
        value = Fraction(self.coefficients[-1])
        for e in reversed(self.coefficients[:-1]):
            value = e - 1 / value
        return value


@lru_cache(maxsize=1 << 16)
def _expand(q: int, p: int) -> tuple[int, ...]:
    # p = e1*q - a1, q = e2*a1 - a2, ... ; e_i = ceil(a_{i-2}/a_{i-1})
    coeffs = []
    a, b = p, q
    while b > 0:
        e = -(-a // b)
        coeffs.append(e)
        a, b = b, e * b - a
    return tuple(coeffs)


def hj_expand(t: CyclicType) -> HJString:
    if t.p < 2:
        raise ValueError("the trivial group has no Hirzebruch-Jung string")
    return HJString(_expand(t.q, t.p))


def hj_length(t: CyclicType) -> int:
    return hj_expand(t).length
