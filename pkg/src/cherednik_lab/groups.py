"""The monomial reflection groups G(m,p,n) and their class/character data.

Elements are monomial matrices: a permutation together with a vector of
zeta-exponents.  The element w with permutation pi and exponents a acts on
the standard basis of the reflection space by w(y_i) = zeta^(a_i) y_(pi(i)),
i.e. the matrix has entry zeta^(a_i) in row pi(i), column i.  Membership in
G(m,p,n) is the condition sum(a_i) = 0 mod p.

On the dual space the action is by the inverse transpose:
w(x_j) = zeta^(-a_j) x_(pi(j)).  All characters below are computed on the
dual space; that convention is fixed once here and used everywhere.
"""

import os
from dataclasses import dataclass
from itertools import permutations, product

from .cyclotomic import CycloNumber, zeta_pow

__all__ = [
    "GroupParams",
    "MonomialMatrix",
    "SizeCapError",
    "enumerate_group",
    "reflections",
    "conjugacy_classes",
    "reflection_classes",
    "ext_power_char",
    "det_char",
    "irrep_count",
    "s_reflection",
    "sigma_reflection",
    "group_generators",
]

DEFAULT_GROUP_CAP = 20000


class SizeCapError(ValueError):
    """Raised when a requested enumeration exceeds the configured cap."""


@dataclass(frozen=True)
class GroupParams:
    """Parameters (m, p, n) with p | m, m > p and n >= 2."""

    m: int
    p: int
    n: int

    def __post_init__(self):
        if self.p < 1 or self.m < 1 or self.m % self.p:
            raise ValueError(f"p must divide m, got m={self.m}, p={self.p}")
        if self.m <= self.p:
            raise ValueError(
                f"m > p required (the reflection set degenerates at m = p), got m={self.m}, p={self.p}"
            )
        if self.n < 2:
            raise ValueError(f"n >= 2 required, got n={self.n}")

    @property
    def d(self):
        return self.m // self.p

    @property
    def appendix_regime(self):
        """True for n = 2 with p even, where the sigma reflections split into
        two conjugacy classes (odd/even twist) and the class count is d+1."""
        return self.n == 2 and self.p % 2 == 0

    @property
    def order(self):
        fact = 1
        for k in range(2, self.n + 1):
            fact *= k
        return self.m**self.n * fact // self.p

    @property
    def r(self):
        """The singular degree m(n-1) + d + 1."""
        return self.m * (self.n - 1) + self.d + 1

    def reflection_count(self):
        return self.n * (self.d - 1) + self.m * self.n * (self.n - 1) // 2

    def reflection_class_count(self):
        return self.d + 1 if self.appendix_regime else self.d


class MonomialMatrix:
    """Group element (perm, exps): w(y_i) = zeta^(exps[i]) y_(perm[i])."""

    __slots__ = ("m", "perm", "exps")

    def __init__(self, m, perm, exps):
        self.m = m
        self.perm = tuple(perm)
        self.exps = tuple(e % m for e in exps)
        if len(self.perm) != len(self.exps):
            raise ValueError("perm and exps must have equal length")

    @classmethod
    def identity(cls, m, n):
        return cls(m, range(n), (0,) * n)

    @property
    def n(self):
        return len(self.perm)

    def is_in(self, params):
        return self.m == params.m and self.n == params.n and sum(self.exps) % params.p == 0

    def __mul__(self, other):
        # (self * other)(y) = self(other(y))
        if self.m != other.m or self.n != other.n:
            raise ValueError("mixed groups")
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        exps = tuple(other.exps[i] + self.exps[other.perm[i]] for i in range(self.n))
        return MonomialMatrix(self.m, perm, exps)

    def inverse(self):
        inv = [0] * self.n
        for i, j in enumerate(self.perm):
            inv[j] = i
        exps = tuple(-self.exps[inv[j]] for j in range(self.n))
        return MonomialMatrix(self.m, inv, exps)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = MonomialMatrix.identity(self.m, self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, MonomialMatrix)
            and self.m == other.m
            and self.perm == other.perm
            and self.exps == other.exps
        )

    def __hash__(self):
        return hash((self.m, self.perm, self.exps))

    def sort_key(self):
        return (self.perm, self.exps)

    def cycles(self):
        """Permutation cycles with their total exponent: [(cycle, sum exps mod m)]."""
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.perm[j]
            out.append((tuple(cyc), sum(self.exps[k] for k in cyc) % self.m))
        return out

    def fixed_space_dim(self):
        """dim ker(1 - w): the number of cycles with total exponent 0 mod m."""
        return sum(1 for _, e in self.cycles() if e == 0)

    def perm_sign(self):
        sign = 1
        for cyc, _ in self.cycles():
            if len(cyc) % 2 == 0:
                sign = -sign
        return sign

    def det_h(self):
        """Determinant on the reflection space: sign(perm) * zeta^(sum exps)."""
        return zeta_pow(self.m, sum(self.exps)) * self.perm_sign()

    def matrix_on_h(self):
        n = self.n
        rows = [[CycloNumber.zero(self.m) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            rows[self.perm[i]][i] = zeta_pow(self.m, self.exps[i])
        return rows

    def matrix_on_hstar(self):
        n = self.n
        rows = [[CycloNumber.zero(self.m) for _ in range(n)] for _ in range(n)]
        for j in range(n):
            rows[self.perm[j]][j] = zeta_pow(self.m, -self.exps[j])
        return rows

    def __repr__(self):
        perm = tuple(i + 1 for i in self.perm)
        return f"MonomialMatrix(m={self.m}, perm={perm}, exps={self.exps})"


def s_reflection(params, i, q=1):
    """The reflection scaling coordinate i (1-based) by zeta^(q*p)."""
    exps = [0] * params.n
    exps[i - 1] = q * params.p
    return MonomialMatrix(params.m, range(params.n), exps)


def sigma_reflection(params, i, j, ell):
    """The order-two reflection swapping coordinates i < j with twist ell."""
    perm = list(range(params.n))
    perm[i - 1], perm[j - 1] = j - 1, i - 1
    exps = [0] * params.n
    exps[i - 1] = -ell
    exps[j - 1] = ell
    return MonomialMatrix(params.m, perm, exps)


def group_generators(params):
    """A generating set: all reflections of both families with q = 1, ell arbitrary."""
    gens = [s_reflection(params, i) for i in range(1, params.n + 1) if params.d > 1]
    for i in range(1, params.n + 1):
        for j in range(i + 1, params.n + 1):
            for ell in range(params.m):
                gens.append(sigma_reflection(params, i, j, ell))
    return gens


def _group_cap():
    value = os.environ.get("CHEREDNIK_LAB_MAX_DIM")
    return int(value) if value else DEFAULT_GROUP_CAP


def enumerate_group(params, cap=None):
    """All elements of G(m,p,n), deterministic order.

    Raises SizeCapError when m^n n!/p exceeds the cap (default 20000,
    overridable via CHEREDNIK_LAB_MAX_DIM or the cap argument).
    """
    cap = cap if cap is not None else _group_cap()
    if params.order > cap:
        raise SizeCapError(
            f"group order {params.order} exceeds cap {cap}; "
            f"set CHEREDNIK_LAB_MAX_DIM >= {params.order} to proceed"
        )
    out = []
    for perm in permutations(range(params.n)):
        for exps in product(range(params.m), repeat=params.n):
            if sum(exps) % params.p == 0:
                out.append(MonomialMatrix(params.m, perm, exps))
    return out


def reflections(params, cap=None):
    """The complex reflections: elements with fixed space of dimension n-1."""
    return [w for w in enumerate_group(params, cap) if w.fixed_space_dim() == params.n - 1]


def conjugacy_classes(params, cap=None):
    """Conjugacy classes by brute-force orbits; each class sorted, min element first."""
    elements = enumerate_group(params, cap)
    return _orbit_partition(elements, elements)


def reflection_classes(params, cap=None):
    """Partition of the reflection set into conjugacy classes."""
    return _orbit_partition(reflections(params, cap), enumerate_group(params, cap))


def _orbit_partition(subset, conjugators):
    remaining = set(subset)
    classes = []
    for w in sorted(subset, key=MonomialMatrix.sort_key):
        if w not in remaining:
            continue
        orbit = {g * w * g.inverse() for g in conjugators}
        remaining -= orbit
        classes.append(sorted(orbit, key=MonomialMatrix.sort_key))
    return classes


def ext_power_char(w, i):
    """Trace of w on the i-th exterior power of the dual reflection space.

    Computed from the cycle data: each permutation cycle of length c and
    total exponent e contributes a factor 1 + (-1)^(c+1) zeta^(-e) t^c to
    det(1 + t w); the trace is the coefficient of t^i.
    """
    n = w.n
    if not 0 <= i <= n:
        raise ValueError(f"exterior power {i} out of range 0..{n}")
    coeffs = [CycloNumber.zero(w.m) for _ in range(n + 1)]
    coeffs[0] = CycloNumber.one(w.m)
    deg = 0
    for cyc, e in w.cycles():
        c = len(cyc)
        factor = zeta_pow(w.m, -e) * (1 if c % 2 else -1)
        for k in range(min(deg, n - c), -1, -1):
            if not coeffs[k].is_zero():
                coeffs[k + c] = coeffs[k + c] + coeffs[k] * factor
        deg += c
    return coeffs[i]


def det_char(w):
    """Determinant of w on the dual reflection space."""
    return ext_power_char(w, w.n)


def irrep_count(params):
    """Number of irreducible representations of G(m,p,n).

    Counted as the sum of p / o_lambda over orbits of the component-rotation
    action on m-multipartitions of n; must agree with the number of
    conjugacy classes of the enumerated group.
    """
    from .multipartitions import multipartitions, orbit_size, varpi_apply

    total = 0
    seen = set()
    for mp in multipartitions(params.m, params.n):
        if mp in seen:
            continue
        orbit = {mp}
        cur = varpi_apply(mp, params)
        while cur != mp:
            orbit.add(cur)
            cur = varpi_apply(cur, params)
        seen |= orbit
        total += params.p // orbit_size(mp, params)
    return total
