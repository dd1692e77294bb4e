"""Cross-check suite: each check compares two independent routes to the same
invariant over a parameter range and reports pass or fail with a short
detail line.  Used by ``s3quotients verify`` and by the acceptance tests."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .eta import cyclic_cot_sum, cyclic_cot_sums, eta_bruteforce, eta_closed, eta_via_quotient
from .exactnum import eisenstein_lhs, sawtooth
from .groups import (
    GroupSpec,
    cyclic,
    dihedral,
    eigenangle_histogram,
    enumerate_group,
    icosahedral,
    index_three,
    index_two,
    is_free_on_s3,
    is_in_su2,
    octahedral,
    order,
    tetrahedral,
    validate,
)
from .hj import CyclicType, hj_expand
from .index import n_correction, n_cyclic, n_via_correction_formula
from .moduli import IMAG_TOL, character_sum, compare_deformations, h1_dim_bruteforce, h1_dim_closed
from .ricci import Verdict, ht_check
from .topology import ell, signature_bookkeeping


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.name}: {self.detail}"


# ------------------------------------------------------------ spec ranges


def noncyclic_specs(max_order: int) -> Iterator[GroupSpec]:
    """Every valid non-cyclic U(2) spec with |Gamma| <= max_order."""
    for n in range(2, max_order // 4 + 1):
        for m in range(1, max_order // (4 * n) + 1):
            for spec in (dihedral(m, n), index_two(m, n)):
                if validate(spec):
                    yield spec
    for make, size in ((tetrahedral, 24), (octahedral, 48), (icosahedral, 120), (index_three, 24)):
        for m in range(1, max_order // size + 1):
            spec = make(m)
            if validate(spec):
                yield spec


def cyclic_specs(max_order: int) -> Iterator[GroupSpec]:
    """L(q,p) for 2 <= p <= max_order and the n = 1 members of D and I2."""
    for p in range(2, max_order + 1):
        for q in range(1, p):
            if math.gcd(q, p) == 1:
                yield cyclic(q, p)
    for m in range(1, max_order // 4 + 1):
        for spec in (dihedral(m, 1), index_two(m, 1)):
            if validate(spec):
                yield spec


def _first(failures: list, limit: int = 3) -> str:
    return "; ".join(str(f) for f in failures[:limit])


def _result(number: int, name: str, failures: list, count: int, what: str) -> CheckResult:
    if failures:
        return CheckResult(number, name, False, f"{len(failures)} of {count} {what} failed: {_first(failures)}")
    return CheckResult(number, name, True, f"{count} {what} agree")


# ------------------------------------------------------------ criteria


def check_eta_routes(max_order: int = 1500) -> CheckResult:
    failures, count = [], 0
    for spec in noncyclic_specs(max_order):
        count += 1
        closed = eta_closed(spec)
        if abs(float(closed) - eta_bruteforce(spec)) >= 1e-8 or eta_via_quotient(spec) != closed:
            failures.append(spec)
    for p in range(2, max_order + 1):
        sums = cyclic_cot_sums(p)
        for q, brute in sums.items():
            count += 1
            if abs(float(eta_closed(cyclic(q, p))) - brute) >= 1e-8:
                failures.append(cyclic(q, p))
    for m in range(1, max_order // 4 + 1):
        for spec in (dihedral(m, 1), index_two(m, 1)):
            if validate(spec):
                count += 1
                if abs(float(eta_closed(spec)) - eta_bruteforce(spec)) >= 1e-8:
                    failures.append(spec)
    return _result(1, "eta closed form = cotangent sum = quotient route", failures, count, "specs")


def check_cyclic_eta(max_p: int = 100) -> CheckResult:
    failures, count = [], 0
    for p in range(2, max_p + 1):
        for q in range(1, p):
            if math.gcd(q, p) == 1:
                count += 1
                if abs(float(eta_closed(cyclic(q, p))) - cyclic_cot_sum(q, p)) >= 1e-9:
                    failures.append((q, p))
    return _result(2, "cyclic eta closed form vs direct cotangent sum", failures, count, "lens spaces")


def check_specific_eta(max_m: int = 50) -> CheckResult:
    failures = []
    expected = {(1, 2): Fraction(0), (1, 4): Fraction(1, 2), (2, 3): Fraction(-2, 9)}
    for (q, p), value in expected.items():
        if eta_closed(cyclic(q, p)) != value or abs(cyclic_cot_sum(q, p) - float(value)) > 1e-12:
            failures.append(f"L({q},{p})")
    for m in range(1, max_m + 1):
        if eta_closed(cyclic(1, 2 * m)) != Fraction(2 * m * m + 1, 3 * m) - 1:
            failures.append(f"L(1,{2 * m})")
    return _result(3, "specific eta values", failures, len(expected) + max_m, "values")


def check_index_oracle(max_order: int = 1500) -> CheckResult:
    failures, count = [], 0
    for spec in noncyclic_specs(max_order):
        count += 1
        if n_correction(spec) != n_via_correction_formula(spec):
            failures.append(spec)
    t1 = tetrahedral(1)
    if not n_correction(t1) == n_via_correction_formula(t1) == 13:
        failures.append("N(T*) != 13")
    return _result(4, "N(Gamma) table vs correction-formula oracle", failures, count, "specs")


def check_cyclic_reversal(max_p: int = 200) -> CheckResult:
    failures, count = [], 0
    for p in range(3, max_p + 1):
        count += 1
        if n_cyclic(CyclicType(1, p)) != -n_cyclic(CyclicType(p - 1, p)) - 10:
            failures.append((1, p))
        for q in range(2, p - 1):
            if math.gcd(q, p) == 1:
                count += 1
                if n_cyclic(CyclicType(q, p)) != -n_cyclic(CyclicType(p - q, p)) - 12:
                    failures.append((q, p))
    return _result(5, "cyclic N reversal relations", failures, count, "pairs")


def check_h1_routes(max_order: int = 1500) -> CheckResult:
    failures, count = [], 0
    for spec in noncyclic_specs(max_order):
        count += 1
        h1 = h1_dim_bruteforce(spec)
        if h1 != h1_dim_closed(spec) or h1 < 0:
            failures.append(spec)
        if spec.m == 1 and h1 != 0:
            failures.append(f"{spec} has m=1 but dim {h1}")
        if spec.m > 1 and abs(character_sum(spec).imag) >= IMAG_TOL:
            failures.append(f"{spec} imaginary part")
    return _result(6, "dim H^1 closed form vs character sum", failures, count, "specs")


def check_eisenstein(max_n: int = 60) -> CheckResult:
    failures, count = [], 0
    for n in range(1, max_n + 1):
        for k in range(0, 2 * n):
            count += 1
            if abs(eisenstein_lhs(n, k) - float(-2 * n * sawtooth(Fraction(k, n)))) >= 1e-9:
                failures.append((n, k))
    return _result(7, "Eisenstein identity", failures, count, "(n,k) pairs")


def check_hitchin_thorpe(max_order: int = 1500) -> CheckResult:
    failures, count = [], 0
    for spec in _all_u2(max_order):
        count += 1
        expected = Verdict.EQUALITY if _su2(spec) else Verdict.VIOLATED
        if ht_check(spec).verdict is not expected:
            failures.append(spec)
        if ht_check(spec, blowups=1).verdict is not Verdict.VIOLATED:
            failures.append(f"{spec} with one blowup")
    for spec in (cyclic(1, 2), cyclic(4, 5), cyclic(2, 7), tetrahedral(1), icosahedral(7), index_three(3)):
        for b in (2, 5, 20):
            if ht_check(spec, blowups=b).verdict is not Verdict.VIOLATED:
                failures.append(f"{spec} with {b} blowups")
    return _result(8, "Hitchin-Thorpe verdicts", failures, count, "specs")


def check_deformations(max_order: int = 1500) -> CheckResult:
    failures, count = [], 0
    for spec in noncyclic_specs(max_order):
        count += 1
        diff = compare_deformations(spec).difference
        if (diff != 0) if is_in_su2(spec) else (diff <= 0):
            failures.append((spec, diff))
    cyclic_count = 0
    for spec in cyclic_specs(max_order):
        cyclic_count += 1
        diff = compare_deformations(spec).difference
        if (diff != 0) if _su2(spec) else (diff <= 0):
            failures.append((spec, diff))
    result = _result(9, "deformation comparison", failures, count + cyclic_count, "specs")
    result.detail += " (cyclic strictness uses the default dim H^0 of 4 for q=1, 2 otherwise)"
    return result


def check_ell(max_mn: int = 30) -> CheckResult:
    failures, count = [], 0
    for args, value in (((1, 1, 1), 3), ((1, 1, 2), 4), ((2, 2, 1), 4)):
        if ell(*args) != value:
            failures.append(args)
    for i in (1, 2):
        for m in range(1, max_mn + 1):
            for n in range(1, max_mn + 1):
                ok = math.gcd(m, 2 * n) == 1 if i == 1 else (m % 2 == 0 and math.gcd(m, n) == 1)
                if not ok:
                    continue
                count += 1
                tau_x, tau_y = signature_bookkeeping(i, m, n)
                if -tau_x - tau_y != ell(i, m, n):
                    failures.append((i, m, n))
    return _result(10, "connected-sum counts", failures, count, "(i,m,n) triples")


def check_enumeration() -> CheckResult:
    failures = []
    samples = [
        cyclic(1, 2), cyclic(3, 7), dihedral(1, 2), dihedral(3, 2), dihedral(5, 3), dihedral(3, 1),
        tetrahedral(1), tetrahedral(5), octahedral(1), octahedral(5), icosahedral(1), icosahedral(7),
        index_two(2, 3), index_two(4, 3), index_two(2, 1), index_three(3), index_three(9),
    ]
    for spec in samples:
        if len(enumerate_group(spec)) != order(spec) or not is_free_on_s3(spec):
            failures.append(spec)
    for spec, table in decomposition_tables().items():
        if eigenangle_histogram(spec) != table:
            failures.append(f"histogram {spec}")
    rejected = 0
    for family, params in INVALID_CHOICES:
        spec = GroupSpec(family, params)
        if validate(spec) or is_free_on_s3(spec):
            failures.append(f"{spec} not rejected")
        else:
            rejected += 1
    if rejected < 3:
        failures.append("fewer than three invalid choices rejected")
    count = len(samples) + len(decomposition_tables()) + len(INVALID_CHOICES)
    return _result(11, "group enumeration, histograms, freeness", failures, count, "checks")


def check_hj(max_p: int = 500) -> CheckResult:
    failures, count = [], 0
    for p in range(2, max_p + 1):
        s = hj_expand(CyclicType(1, p))
        if s.coefficients != (p,):
            failures.append(f"L(1,{p})")
        s = hj_expand(CyclicType(p - 1, p))
        if s.coefficients != (2,) * (p - 1):
            failures.append(f"L({p - 1},{p})")
        for q in range(1, p):
            if math.gcd(q, p) == 1:
                count += 1
                if hj_expand(CyclicType(q, p)).continued_fraction() != Fraction(p, q):
                    failures.append(f"L({q},{p})")
    return _result(12, "Hirzebruch-Jung strings", failures, count, "strings")


CHECKS: list[tuple[int, Callable[..., CheckResult], bool]] = [
    (1, check_eta_routes, True),
    (2, check_cyclic_eta, False),
    (3, check_specific_eta, False),
    (4, check_index_oracle, True),
    (5, check_cyclic_reversal, False),
    (6, check_h1_routes, True),
    (7, check_eisenstein, False),
    (8, check_hitchin_thorpe, True),
    (9, check_deformations, True),
    (10, check_ell, False),
    (11, check_enumeration, False),
    (12, check_hj, False),
]


def run_all(max_order: int = 1500) -> list[CheckResult]:
    """Run every check; the flag marks checks that take the order bound."""
    return [fn(max_order) if takes_order else fn() for _, fn, takes_order in CHECKS]


# ------------------------------------------------------------ helpers


def _su2(spec: GroupSpec) -> bool:
    # exact test for cyclic groups; enumeration otherwise
    if spec.family == "L":
        q, p = spec.params
        return (q + 1) % p == 0
    return is_in_su2(spec)


def _all_u2(max_order: int) -> Iterator[GroupSpec]:
    yield from noncyclic_specs(max_order)
    yield from cyclic_specs(max_order)


# ------------------------------------------------------------ decomposition tables

# Invalid parameter choices that must not give free actions.
INVALID_CHOICES = [("D", (3, 3)), ("D", (2, 3)), ("T", (3,)), ("O", (2,)), ("I", (5,)), ("I2", (3, 2)), ("I3", (1,))]


def _pair(a, b) -> tuple[Fraction, Fraction]:
    return tuple(sorted((Fraction(a) % 1, Fraction(b) % 1)))


def _su2_table(rows) -> Counter:
    # rows of (turns x giving the pair {e^{2 pi i x}, e^{-2 pi i x}}, multiplicity)
    c: Counter = Counter()
    for xs, mult in rows:
        for x in xs:
            c[_pair(x, -x)] += mult
    return c


def binary_dihedral_table(n: int) -> Counter:
    return _su2_table([([Fraction(k, 2 * n) for k in range(1, 2 * n + 1)], 1), ([Fraction(1, 4)], 2 * n)])


def binary_tetrahedral_table() -> Counter:
    F = Fraction
    return _su2_table([([0, F(1, 2)], 1), ([F(1, 6), F(1, 3)], 8), ([F(1, 4)], 6)])


def binary_octahedral_table() -> Counter:
    F = Fraction
    return _su2_table([([0, F(1, 2)], 1), ([F(1, 6), F(1, 3)], 8), ([F(1, 8), F(1, 4), F(3, 8)], 6), ([F(1, 4)], 12)])


def binary_icosahedral_table() -> Counter:
    F = Fraction
    return _su2_table(
        [([0, F(1, 2)], 1), ([F(1, 6), F(1, 3)], 20), ([F(k, 10) for k in range(1, 5)], 12), ([F(1, 4)], 30)]
    )


def index_two_table(m: int, n: int) -> Counter:
    F = Fraction
    c: Counter = Counter()
    for l in range(m):
        sign = F(l, 2)
        for k in range(2 * n):
            c[_pair(sign + F(l, 2 * m) + F(k, 2 * n), sign + F(l, 2 * m) - F(k, 2 * n))] += 1
            c[_pair(sign + F(2 * l + 1, 4 * m) + F(1, 4), sign + F(2 * l + 1, 4 * m) - F(1, 4))] += 1
    return c


def index_three_table(m: int) -> Counter:
    F = Fraction
    c: Counter = Counter()
    for r in range(m):
        for sign in (0, F(1, 2)):
            for base, (a, b), mult in (
                (F(r, 2 * m), (0, 0), 1),
                (F(r, 2 * m), (F(1, 4), F(-1, 4)), 3),
                (F(3 * r + 1, 6 * m), (F(1, 6), F(-1, 6)), 2),
                (F(3 * r + 1, 6 * m), (F(1, 3), F(-1, 3)), 2),
                (F(3 * r + 2, 6 * m), (F(1, 3), F(-1, 3)), 4),
            ):
                c[_pair(sign + base + a, sign + base + b)] += mult
    return c


def decomposition_tables() -> dict[GroupSpec, Counter]:
    """Expected eigen-angle multisets, in turns, at the smallest parameters.
    At m = 1 the product groups coincide with the binary polyhedral groups."""
    return {
        dihedral(1, 2): binary_dihedral_table(2),
        tetrahedral(1): binary_tetrahedral_table(),
        octahedral(1): binary_octahedral_table(),
        icosahedral(1): binary_icosahedral_table(),
        index_two(2, 3): index_two_table(2, 3),
        index_three(3): index_three_table(3),
    }
