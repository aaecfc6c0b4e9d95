"""Exact arithmetic in the cyclotomic field Q(zeta_m) = Q[x]/(Phi_m).

Elements are represented by their coordinate vector in the power basis
1, zeta, ..., zeta^(phi(m)-1).  Phi_m is monic over Z, so reduction of
higher powers has integer coefficients and the representation is unique:
equality of field elements is equality of coordinate tuples.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "euler_phi",
    "cyclotomic_polynomial",
    "zeta_pow",
    "CycloNumber",
]


def euler_phi(m):
    """Euler totient of m."""
    if m < 1:
        raise ValueError(f"totient undefined for {m}")
    count = 0
    for k in range(1, m + 1):
        if gcd(k, m) == 1:
            count += 1
    return count


def _poly_div_exact_int(num, den):
    """Divide integer polynomials exactly (coefficient lists, low to high)."""
    num = list(num)
    quot = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + len(den) - 1]
        if c % lead:
            raise ArithmeticError("non-exact integer polynomial division")
        q = c // lead
        quot[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("nonzero remainder in polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Coefficients of Phi_m (monic, degree phi(m)), low to high, as ints.

    Computed by dividing x^m - 1 by the product of Phi_d over proper
    divisors d of m.
    """
    if m < 1:
        raise ValueError(f"cyclotomic polynomial undefined for {m}")
    num = [0] * (m + 1)
    num[0] = -1
    num[m] = 1
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            phi_d = cyclotomic_polynomial(d)
            den = _poly_mul_int(den, phi_d)
    return tuple(_poly_div_exact_int(num, den))


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def _reduction_rows(m):
    """x^k mod Phi_m for phi(m) <= k <= 2*phi(m) - 2, as integer tuples."""
    phi = euler_phi(m)
    mod = cyclotomic_polynomial(m)
    rows = []
    # x^phi = -(lower part of Phi); each next row is x * previous, reduced.
    cur = [-c for c in mod[:phi]]
    rows.append(tuple(cur))
    for _ in range(phi - 2):
        nxt = [0] + cur[:-1]
        top = cur[-1]
        if top:
            for j in range(phi):
                nxt[j] -= top * mod[j]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


@lru_cache(maxsize=None)
def _zeta_power_coords(m, k):
    """Coordinates of zeta_m^k (k reduced mod m) in the power basis."""
    k %= m
    phi = euler_phi(m)
    if k < phi:
        return tuple(Fraction(1) if i == k else Fraction(0) for i in range(phi))
    # reduce x^k by repeated multiplication-by-x on an integer vector
    cur = [0] * phi
    cur[phi - 1] = 1
    mod = cyclotomic_polynomial(m)
    for _ in range(k - (phi - 1)):
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * mod[j]
    return tuple(Fraction(c) for c in cur)


class CycloNumber:
    """An element of Q(zeta_m), stored as phi(m) rational coordinates."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs):
        phi = euler_phi(m)
        coeffs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ValueError(f"need {phi} coordinates for order {m}, got {len(coeffs)}")
        self.m = m
        self.coeffs = coeffs

    @classmethod
    def zero(cls, m):
        return cls(m, (Fraction(0),) * euler_phi(m))

    @classmethod
    def one(cls, m):
        return cls.from_rational(m, 1)

    @classmethod
    def from_rational(cls, m, q):
        phi = euler_phi(m)
        return cls(m, (Fraction(q),) + (Fraction(0),) * (phi - 1))

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.m != self.m:
                raise ValueError(f"mixed cyclotomic orders {self.m} and {other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNumber.from_rational(self.m, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloNumber(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloNumber(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CycloNumber(self.m, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return CycloNumber.zero(self.m)
            return CycloNumber(self.m, tuple(a * other for a in self.coeffs))
        if not isinstance(other, CycloNumber):
            return NotImplemented
        if other.m != self.m:
            raise ValueError(f"mixed cyclotomic orders {self.m} and {other.m}")
        phi = len(self.coeffs)
        if phi == 1:
            return CycloNumber(self.m, (self.coeffs[0] * other.coeffs[0],))
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        out = conv[:phi]
        rows = _reduction_rows(self.m)
        for j in range(phi - 1):
            c = conv[phi + j]
            if c:
                row = rows[j]
                for k in range(phi):
                    if row[k]:
                        out[k] += c * row[k]
        return CycloNumber(self.m, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.is_rational():
            return CycloNumber.from_rational(self.m, 1 / self.coeffs[0])
        # extended gcd of self (as a polynomial) and Phi_m over Q
        r0 = [Fraction(c) for c in cyclotomic_polynomial(self.m)]
        r1 = list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv = 1 / r1[0]
                phi = euler_phi(self.m)
                coeffs = [c * inv for c in s1] + [Fraction(0)] * (phi - len(s1))
                return CycloNumber(self.m, tuple(coeffs[:phi]))
            q, rem = _poly_divmod_frac(r0, r1)
            s0, s1 = s1, _poly_sub_frac(s0, _poly_mul_frac(q, s1))
            r0, r1 = r1, rem

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNumber.one(self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, t):
        """Apply the field automorphism zeta -> zeta^t (t coprime to m)."""
        if gcd(t, self.m) != 1:
            raise ValueError(f"{t} not coprime to {self.m}")
        out = CycloNumber.zero(self.m)
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + zeta_pow(self.m, k * t) * c
        return out

    def conjugate(self):
        return self.galois(-1)

    def lift(self, big_m):
        """Embed into Q(zeta_M) for m | M via zeta_m -> zeta_M^(M/m)."""
        if big_m % self.m:
            raise ValueError(f"{self.m} does not divide {big_m}")
        step = big_m // self.m
        out = CycloNumber.zero(big_m)
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + zeta_pow(big_m, k * step) * c
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                z = f"z{k}" if k > 1 else "z"
                parts.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(parts).replace("+ -", "- ")


def _poly_divmod_frac(a, b):
    a = list(a)
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] * inv_lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return q, a[:db]


def _poly_mul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub_frac(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for j, y in enumerate(b):
        a[j] -= y
    return a


@lru_cache(maxsize=None)
def zeta_pow(m, k):
    """The root of unity zeta_m^k as a CycloNumber (k arbitrary, reduced mod m)."""
    return CycloNumber(m, _zeta_power_coords(m, k % m))
