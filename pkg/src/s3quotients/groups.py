"""Finite subgroups of SO(4) acting freely on S^3, as pairs of unit quaternions.

An element is a pair (a, b) of unit quaternions acting on H = C^2 by
h -> a h conj(b), with (a, b) and (-a, -b) identified.  Under
(z1, z2) <-> z1 + z2 j, left multiplication by exp(i t) is the scalar
exp(i t) and right multiplication by conj(b) is a matrix in SU(2), so
phi(S^1 x S^3) = U(2).

Quaternions are stored as float arrays (w, x, y, z).  Families:

    L(q,p)    cyclic
    D(m,n)    phi(L(1,2m) x D*_4n)
    T(m)      phi(L(1,2m) x T*)
    O(m)      phi(L(1,2m) x O*)
    I(m)      phi(L(1,2m) x I*)
    I2(m,n)   index-2 diagonal subgroup of phi(L(1,4m) x D*_4n)
    I3(m)     index-3 diagonal subgroup of phi(L(1,6m) x T*)

A leading ``~`` denotes the orientation-reversed conjugate (left and right
factors swapped).
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .hj import CyclicType

TWO_PI = 2 * math.pi

FAMILIES = ("L", "D", "T", "O", "I", "I2", "I3")
_ARITY = {"L": 2, "D": 2, "T": 1, "O": 1, "I": 1, "I2": 2, "I3": 1}
PRODUCT_FAMILIES = ("D", "T", "O", "I")
# |Gamma| / (4m): order of the polyhedral part seen by the central curve
_POLY_INDEX = {"T": 6, "O": 12, "I": 30, "I3": 6}

# coordinates closer than this are the same element
TOL = 1e-9
_GRID = 1e8
_EDGE = 1e-11 * _GRID


class SpecError(ValueError):
    """Malformed group spec or parameters outside a formula's domain."""


@dataclass(frozen=True)
class GroupSpec:
    family: str
    params: tuple[int, ...]
    reversed: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SpecError(f"unknown family {self.family!r}")
        params = tuple(int(x) for x in self.params)
        if len(params) != _ARITY[self.family]:
            raise SpecError(f"{self.family} takes {_ARITY[self.family]} parameter(s)")
        positive = params[1:] if self.family == "L" else params
        if min(positive) < 1:
            raise SpecError(f"parameters must be positive: {params}")
        if self.family == "L":
            q, p = params
            params = (q % p, p)
            if self.reversed:
                # a reversed cyclic group is again cyclic: L(-q, p)
                params = ((p - params[0]) % p, p)
                object.__setattr__(self, "reversed", False)
        object.__setattr__(self, "params", params)

    @property
    def m(self) -> int:
        return self.params[0] if self.family != "L" else 1

    @property
    def n(self) -> int:
        if self.family in ("D", "I2"):
            return self.params[1]
        raise AttributeError(f"family {self.family} has no n")

    @property
    def is_cyclic_family(self) -> bool:
        return self.family == "L"

    @property
    def is_cyclic(self) -> bool:
        """True for L(q,p) and for the n = 1 members of D and I2."""
        return self.family == "L" or (self.family in ("D", "I2") and self.params[1] == 1)

    def unreversed(self) -> "GroupSpec":
        return GroupSpec(self.family, self.params, False)

    def __str__(self):
        inner = ",".join(str(x) for x in self.params)
        return ("~" if self.reversed else "") + f"{self.family}({inner})"


def cyclic(q: int, p: int) -> GroupSpec:
    return GroupSpec("L", (q, p))


def dihedral(m: int, n: int, reversed: bool = False) -> GroupSpec:
    return GroupSpec("D", (m, n), reversed)


def tetrahedral(m: int, reversed: bool = False) -> GroupSpec:
    return GroupSpec("T", (m,), reversed)


def octahedral(m: int, reversed: bool = False) -> GroupSpec:
    return GroupSpec("O", (m,), reversed)


def icosahedral(m: int, reversed: bool = False) -> GroupSpec:
    return GroupSpec("I", (m,), reversed)


def index_two(m: int, n: int, reversed: bool = False) -> GroupSpec:
    return GroupSpec("I2", (m, n), reversed)


def index_three(m: int, reversed: bool = False) -> GroupSpec:
    return GroupSpec("I3", (m,), reversed)


_SPEC_RE = re.compile(r"^(~?)(L|D|T|O|I2|I3|I)\(([0-9,\-]*)\)$")


def parse_spec(text: str) -> GroupSpec:
    """Parse the grammar ``["~"] family`` with family one of
    L(q,p) D(m,n) T(m) O(m) I(m) I2(m,n) I3(m).  Whitespace is ignored."""
    compact = re.sub(r"\s+", "", text)
    match = _SPEC_RE.match(compact)
    if not match:
        raise SpecError(f"cannot parse group spec {text!r}")
    tilde, family, inner = match.groups()
    try:
        params = tuple(int(x) for x in inner.split(",")) if inner else ()
    except ValueError:
        raise SpecError(f"bad integer list in {text!r}") from None
    if len(params) != _ARITY[family]:
        raise SpecError(f"{family} takes {_ARITY[family]} parameter(s), got {len(params)}")
    if family == "L" and params[1] < 1:
        raise SpecError("L(q,p) needs p >= 1")
    return GroupSpec(family, params, bool(tilde))


def validate(spec: GroupSpec) -> bool:
    """Parameter conditions of the free U(2) classification."""
    f, ps = spec.family, spec.params
    if f == "L":
        q, p = ps
        return math.gcd(q, p) == 1
    if f == "D":
        m, n = ps
        return math.gcd(m, 2 * n) == 1
    if f in ("T", "O"):
        return math.gcd(ps[0], 6) == 1
    if f == "I":
        return math.gcd(ps[0], 30) == 1
    if f == "I2":
        m, n = ps
        return m % 2 == 0 and math.gcd(m, n) == 1
    if f == "I3":
        return math.gcd(ps[0], 6) == 3
    return False


def _require_valid(spec: GroupSpec):
    if not validate(spec):
        raise SpecError(f"{spec} violates the free-action parameter conditions")


def order(spec: GroupSpec) -> int:
    _require_valid(spec)
    return _formal_order(spec)


def _formal_order(spec: GroupSpec) -> int:
    f, ps = spec.family, spec.params
    if f == "L":
        return ps[1]
    m = ps[0]
    if f in ("D", "I2"):
        return 4 * m * ps[1]
    return {"T": 24, "O": 48, "I": 120, "I3": 24}[f] * m


def poly_index(spec: GroupSpec) -> int:
    """|Gamma|/(4m) for the non-cyclic U(2) families."""
    if spec.family in ("D", "I2"):
        return spec.params[1]
    return _POLY_INDEX[spec.family]


def reverse(spec: GroupSpec) -> GroupSpec:
    if spec.family == "L":
        q, p = spec.params
        return GroupSpec("L", ((p - q) % p, p))
    return GroupSpec(spec.family, spec.params, not spec.reversed)


# ---------------------------------------------------------------- quaternions


def qmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hamilton product, broadcasting over leading axes."""
    aw, ax, ay, az = np.moveaxis(np.asarray(a, dtype=float), -1, 0)
    bw, bx, by, bz = np.moveaxis(np.asarray(b, dtype=float), -1, 0)
    return np.stack(
        [
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ],
        axis=-1,
    )


def qexp_i(theta: float) -> np.ndarray:
    """exp(i theta) as a quaternion."""
    return np.array([math.cos(theta), math.sin(theta), 0.0, 0.0])


ONE = np.array([1.0, 0.0, 0.0, 0.0])
QI = np.array([0.0, 1.0, 0.0, 0.0])
QJ = np.array([0.0, 0.0, 1.0, 0.0])
QK = np.array([0.0, 0.0, 0.0, 1.0])
OMEGA = np.array([0.5, 0.5, 0.5, 0.5])  # (1+i+j+k)/2, order 6
_GOLDEN = (1 + math.sqrt(5)) / 2


def binary_generators(name: str, n: int = 0) -> list[np.ndarray]:
    """Unit quaternion generators of D*_4n, T*, O*, I*."""
    if name == "D":
        return [qexp_i(math.pi / n), QJ]
    if name == "T":
        return [QI, QJ, OMEGA]
    if name == "O":
        return [QI, QJ, OMEGA, np.array([1, 1, 0, 0]) / math.sqrt(2)]
    if name == "I":
        return [OMEGA, np.array([_GOLDEN, 1 / _GOLDEN, 1.0, 0.0]) / 2]
    raise SpecError(f"no binary polyhedral group {name!r}")


@lru_cache(maxsize=None)
def binary_polyhedral(name: str, n: int = 0) -> np.ndarray:
    """All elements of a binary polyhedral group as an (N, 4) array."""
    expected = {"D": 4 * n, "T": 24, "O": 48, "I": 120}[name]
    gens = [np.concatenate([g, ONE]) for g in binary_generators(name, n)]
    # closure with a trivial right factor, no +-identification
    elems = _closure(gens, limit=2 * expected, identify_sign=False)[:, :4]
    if len(elems) != expected:
        raise AssertionError(f"{name}* closure has {len(elems)} elements, expected {expected}")
    elems.setflags(write=False)
    return elems


# ---------------------------------------------------------------- elements


@dataclass(frozen=True)
class GroupElement:
    """phi(left, right): h -> left * h * conj(right)."""

    left: tuple[float, float, float, float]
    right: tuple[float, float, float, float]

    @classmethod
    def from_row(cls, row) -> "GroupElement":
        row = [float(x) for x in row]
        return cls(tuple(row[:4]), tuple(row[4:]))

    def as_row(self) -> np.ndarray:
        return np.array(self.left + self.right)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement.from_row(canonicalize(_mul_rows(self.as_row(), other.as_row())))


def pair(left, right) -> GroupElement:
    return GroupElement.from_row(canonicalize(np.concatenate([left, right])))


def _mul_rows(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.concatenate([qmul(x[..., :4], y[..., :4]), qmul(x[..., 4:], y[..., 4:])], axis=-1)


def canonicalize(rows: np.ndarray) -> np.ndarray:
    """Pick the representative of {(a,b), (-a,-b)} whose first non-negligible
    coordinate (left first, then right) is positive."""
    rows = np.array(rows, dtype=float)
    flat = rows.reshape(-1, 8)
    big = np.abs(flat) > TOL
    first = np.argmax(big, axis=1)
    lead = flat[np.arange(len(flat)), first]
    flat *= np.where(lead < 0, -1.0, 1.0)[:, None]
    return flat.reshape(rows.shape)


def _keys(row: np.ndarray) -> list[bytes]:
    """Grid keys of a row; a coordinate sitting within rounding noise of a
    grid boundary yields both neighbouring keys."""
    scaled = row * _GRID
    base = np.rint(scaled)
    keys = [base.astype(np.int64)]
    frac = scaled - np.floor(scaled)
    for c in np.nonzero(np.abs(frac - 0.5) < _EDGE)[0]:
        alt = []
        for k in keys:
            k2 = k.copy()
            k2[c] = np.floor(scaled[c]) if base[c] > scaled[c] else np.ceil(scaled[c])
            alt.append(k2)
        keys += alt
    return [k.tobytes() for k in keys]


class _ElementSet:
    def __init__(self):
        self._index: dict[bytes, int] = {}
        self.rows: list[np.ndarray] = []

    def __len__(self):
        return len(self.rows)

    def add(self, row: np.ndarray) -> bool:
        primary = np.rint(row * _GRID).astype(np.int64).tobytes()
        if primary in self._index:
            return False
        for key in _keys(row):
            self._index[key] = len(self.rows)
        self.rows.append(row)
        return True

    def add_many(self, rows: np.ndarray) -> list[np.ndarray]:
        """Add rows in order; return those that were new."""
        scaled = rows * _GRID
        primary = np.rint(scaled).astype(np.int64)
        edge = (np.abs(scaled - np.floor(scaled) - 0.5) < _EDGE).any(axis=1)
        fresh = []
        for row, key, on_edge in zip(rows, primary, edge):
            key = key.tobytes()
            if key in self._index:
                continue
            for k in _keys(row) if on_edge else (key,):
                self._index[k] = len(self.rows)
            self.rows.append(row)
            fresh.append(row)
        return fresh


def _closure(gens: list[np.ndarray], limit: int, identify_sign: bool = True) -> np.ndarray:
    """Breadth-first closure of a generating set of (N, 8) rows."""
    fix = canonicalize if identify_sign else (lambda r: r)
    seen = _ElementSet()
    identity = np.concatenate([ONE, ONE])
    seen.add(identity)
    frontier = identity[None, :]
    gens = np.array(gens, dtype=float).reshape(-1, 8)
    while len(frontier):
        cand = fix(_mul_rows(gens[None, :, :], frontier[:, None, :]).reshape(-1, 8))
        fresh = seen.add_many(cand)
        if len(seen) > limit:
            raise RuntimeError(f"closure exceeded {limit} elements; generator bug")
        frontier = np.array(fresh).reshape(-1, 8)
    return np.array(seen.rows)


def _dedup(rows: np.ndarray) -> np.ndarray:
    seen = _ElementSet()
    seen.add_many(canonicalize(rows))
    return np.array(seen.rows)


def _sorted(rows: np.ndarray) -> np.ndarray:
    rounded = np.round(rows, 9)
    return rows[np.lexsort(rounded.T[::-1])]


def _swap(rows: np.ndarray) -> np.ndarray:
    return canonicalize(np.concatenate([rows[..., 4:], rows[..., :4]], axis=-1))


# ---------------------------------------------------------------- generators


def _unreversed_generators(spec: GroupSpec) -> list[np.ndarray]:
    f, ps = spec.family, spec.params
    if f == "L":
        q, p = ps
        # diag(e^{i(a-b)}, e^{i(a+b)}) with a-b = 2pi/p, a+b = 2pi q/p
        return [np.concatenate([qexp_i(math.pi * (1 + q) / p), qexp_i(math.pi * (q - 1) / p)])]
    m = ps[0]
    if f in PRODUCT_FAMILIES:
        central = np.concatenate([qexp_i(math.pi / m), ONE])
        poly = binary_generators(f, ps[1] if f == "D" else 0)
        return [central] + [np.concatenate([ONE, g]) for g in poly]
    if f == "I2":
        n = ps[1]
        return [
            np.concatenate([qexp_i(math.pi / m), ONE]),
            np.concatenate([ONE, qexp_i(math.pi / n)]),
            np.concatenate([qexp_i(math.pi / (2 * m)), QJ]),
        ]
    if f == "I3":
        # nu(omega) = 1, i and j lie in the kernel Q8
        return [
            np.concatenate([qexp_i(math.pi / (3 * m)), OMEGA]),
            np.concatenate([ONE, QI]),
            np.concatenate([ONE, QJ]),
        ]
    raise SpecError(f"unknown family {f}")


def _generator_rows(spec: GroupSpec) -> np.ndarray:
    rows = np.array(_unreversed_generators(spec))
    return _swap(rows) if spec.reversed else canonicalize(rows)


def generators(spec: GroupSpec) -> list[GroupElement]:
    _require_valid(spec)
    return [GroupElement.from_row(r) for r in _generator_rows(spec)]


# ---------------------------------------------------------------- enumeration


def _cyclic_powers(q: int, p: int) -> np.ndarray:
    # the closure of one generator is its set of powers; take them exactly
    j = np.arange(p)
    a = math.pi * (1 + q) / p * j
    b = math.pi * (q - 1) / p * j
    z = np.zeros(p)
    return np.stack([np.cos(a), np.sin(a), z, z, np.cos(b), np.sin(b), z, z], axis=1)


def _index_two_rows(m: int, n: int) -> np.ndarray:
    """Pairs (exp(i pi k/2m), d) with d in D*_4n and k + eps(d) even;
    eps is 0 on the cyclic subgroup <exp(i pi/n)> and 1 on its j-coset."""
    dstar = binary_polyhedral("D", n)
    eps = (np.abs(dstar[:, 2]) + np.abs(dstar[:, 3]) > 0.5).astype(int)
    k = np.arange(4 * m)
    ok = (k[:, None] + eps[None, :]) % 2 == 0
    ki, di = np.nonzero(ok)
    theta = math.pi * k[ki] / (2 * m)
    left = np.stack([np.cos(theta), np.sin(theta), 0 * theta, 0 * theta], axis=1)
    return np.concatenate([left, dstar[di]], axis=1)


def tetrahedral_nu(tstar: np.ndarray) -> np.ndarray:
    """The surjection T* -> Z/3 with kernel Q8, normalised by nu(omega) = 1."""
    in_q8 = np.isclose(np.abs(tstar).max(axis=1), 1.0, atol=1e-9)
    prod = qmul(OMEGA[None, :] * np.array([1, -1, -1, -1]), tstar)  # conj(omega) t
    in_omega_coset = np.isclose(np.abs(prod).max(axis=1), 1.0, atol=1e-9)
    return np.where(in_q8, 0, np.where(in_omega_coset, 1, 2))


def _index_three_rows(m: int) -> np.ndarray:
    """Pairs (exp(i pi k/3m), t) with t in T* and k = nu(t) mod 3."""
    tstar = binary_polyhedral("T")
    nu = tetrahedral_nu(tstar)
    k = np.arange(6 * m)
    ok = (k[:, None] - nu[None, :]) % 3 == 0
    ki, ti = np.nonzero(ok)
    theta = math.pi * k[ki] / (3 * m)
    left = np.stack([np.cos(theta), np.sin(theta), 0 * theta, 0 * theta], axis=1)
    return np.concatenate([left, tstar[ti]], axis=1)


@lru_cache(maxsize=256)
def _element_array_cached(spec: GroupSpec) -> np.ndarray:
    if spec.reversed:
        rows = _swap(element_array(spec.unreversed()))
        rows = _sorted(rows)
    else:
        f, ps = spec.family, spec.params
        if f == "L":
            rows = canonicalize(_cyclic_powers(*ps))
        elif f == "I2":
            rows = _dedup(_index_two_rows(*ps))
        elif f == "I3":
            rows = _dedup(_index_three_rows(ps[0]))
        else:
            rows = _closure(list(_generator_rows(spec)), limit=10 * _formal_order(spec))
        rows = _sorted(rows)
    rows.setflags(write=False)
    return rows


def element_array(spec: GroupSpec) -> np.ndarray:
    """All elements as an (N, 8) array of canonical (left, right) rows.

    Works for parameter sets that fail ``validate`` too; the free-action
    check depends on that.
    """
    return _element_array_cached(spec)


def closure_of(gen_rows) -> np.ndarray:
    """Closure of an arbitrary list of (left, right) rows."""
    gen_rows = canonicalize(np.array(gen_rows, dtype=float).reshape(-1, 8))
    return _sorted(_closure(list(gen_rows), limit=200000))


def enumerate_group(spec: GroupSpec) -> list[GroupElement]:
    _require_valid(spec)
    return [GroupElement.from_row(r) for r in element_array(spec)]


def same_elements(a: np.ndarray, b: np.ndarray) -> bool:
    """Set equality of two element arrays, up to the sign identification."""
    if len(a) != len(b):
        return False
    seen = _ElementSet()
    for row in canonicalize(a):
        seen.add(row)
    return all(not seen.add(row) for row in canonicalize(b)) and len(seen) == len(a)


# ---------------------------------------------------------------- angles


def principal_angles(quats: np.ndarray) -> np.ndarray:
    """Angle in [0, pi] with cos(angle) the real part."""
    quats = np.asarray(quats)
    return np.arctan2(np.linalg.norm(quats[..., 1:], axis=-1), quats[..., 0])


def rotation_array(rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    alpha = principal_angles(rows[..., :4])
    beta = principal_angles(rows[..., 4:])
    return np.mod(alpha - beta, TWO_PI), np.mod(alpha + beta, TWO_PI)


def rotation_numbers(g: GroupElement) -> tuple[float, float]:
    """(alpha - beta, alpha + beta) mod 2 pi from the principal angles of the
    left and right quaternions."""
    r, s = rotation_array(g.as_row())
    return float(r), float(s)


def u2_eigenangle_array(rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalue arguments of the U(2) matrix of each element.

    Requires a complex left factor: left = exp(i t) gives eigenvalues
    exp(i(t -+ beta)) with beta the principal angle of the right factor.
    """
    if np.abs(rows[..., 2:4]).max(initial=0.0) > TOL:
        raise SpecError("element is not in U(2): left factor is not complex")
    t = np.arctan2(rows[..., 1], rows[..., 0])
    beta = principal_angles(rows[..., 4:])
    return np.mod(t - beta, TWO_PI), np.mod(t + beta, TWO_PI)


def _near_zero_mod_2pi(x: np.ndarray, tol: float = 1e-7) -> np.ndarray:
    x = np.mod(x, TWO_PI)
    return np.minimum(x, TWO_PI - x) < tol


def identity_mask(rows: np.ndarray) -> np.ndarray:
    r, s = rotation_array(rows)
    return _near_zero_mod_2pi(r) & _near_zero_mod_2pi(s)


def is_free_array(rows: np.ndarray) -> bool:
    r, s = rotation_array(rows)
    fixed = _near_zero_mod_2pi(r) | _near_zero_mod_2pi(s)
    return int(fixed.sum()) == int(identity_mask(rows).sum()) == 1


def is_free_on_s3(spec: GroupSpec) -> bool:
    """True iff no non-identity element of the generated group has
    eigenvalue 1; computed from the enumeration, not from ``validate``."""
    return is_free_array(element_array(spec))


def is_in_su2(spec: GroupSpec) -> bool:
    _require_valid(spec)
    # det = exp(i(r+s)) for the U(2) image
    r, s = rotation_array(element_array(spec))
    return bool(np.all(_near_zero_mod_2pi(r + s)))


def _turns(x: float, max_den: int) -> Fraction:
    t = (x / TWO_PI) % 1.0
    frac = Fraction(t).limit_denominator(max_den)
    if abs(float(frac) - t) > 1e-9:
        raise ArithmeticError(f"angle {x} is not a rational multiple of 2 pi")
    return frac % 1


def eigenangle_histogram(spec: GroupSpec) -> Counter:
    """Multiset of eigen-angle pairs, each angle as an exact fraction of a turn.

    U(2) specs are keyed by the sorted eigenvalue arguments of the U(2)
    matrix; reversed specs by the rotation-number pair, normalised over the
    swap and joint negation that leave the SO(4) class unchanged.
    """
    _require_valid(spec)
    rows = element_array(spec)
    max_den = 4 * _formal_order(spec) * 30
    hist: Counter = Counter()
    if not spec.reversed:
        a, b = u2_eigenangle_array(rows)
        for x, y in zip(a, b):
            hist[tuple(sorted((_turns(x, max_den), _turns(y, max_den))))] += 1
    else:
        r, s = rotation_array(rows)
        for x, y in zip(r, s):
            u, v = _turns(x, max_den), _turns(y, max_den)
            forms = [(u, v), (v, u), ((-u) % 1, (-v) % 1), ((-v) % 1, (-u) % 1)]
            hist[min(forms)] += 1
    return hist


def cyclic_equivalent(spec: GroupSpec) -> CyclicType:
    """The lens type L(q,p) that a cyclic spec is orientation-preservingly
    conjugate to.  The n = 1 members of D and I2 are L(2m+1, 4m)."""
    if spec.family == "L":
        return CyclicType(*spec.params)
    if spec.family in ("D", "I2") and spec.params[1] == 1:
        m = spec.params[0]
        t = CyclicType(2 * m + 1, 4 * m)
        return t.reversed() if spec.reversed else t
    raise SpecError(f"{spec} is not cyclic")


def require_noncyclic_u2(spec: GroupSpec, what: str):
    _require_valid(spec)
    if spec.is_cyclic:
        raise SpecError(f"{what} needs a non-cyclic group; {spec} is cyclic")
    if spec.reversed:
        raise SpecError(f"{what} needs a subgroup of U(2); {spec} is orientation-reversed")
