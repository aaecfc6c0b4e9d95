"""Multivariate polynomials over Q(zeta_m) with the monomial group action.

Terms are stored sparsely as {exponent tuple: nonzero CycloNumber}.  The
global monomial order is graded lexicographic (degree first, then lex on
exponent tuples); every echelonized basis is normalized against it.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

from .cyclotomic import CycloNumber, zeta_pow

__all__ = [
    "Poly",
    "ExactDivisionError",
    "grlex_key",
    "monomials_of_degree",
    "act",
    "fundamental_invariants",
    "coinvariant_hilbert",
]


class ExactDivisionError(ArithmeticError):
    """A polynomial division that must be exact left a remainder."""


def grlex_key(exps):
    return (sum(exps), exps)


@lru_cache(maxsize=None)
def monomials_of_degree(n, k):
    """Exponent tuples of total degree k in n variables, grlex-descending."""
    out = []

    def extend(pos, remaining, prefix):
        if pos == n - 1:
            out.append(tuple(prefix + [remaining]))
            return
        for e in range(remaining, -1, -1):
            extend(pos + 1, remaining - e, prefix + [e])

    extend(0, k, [])
    return tuple(out)


class Poly:
    """Polynomial in x_1..x_n over Q(zeta_m)."""

    __slots__ = ("m", "n", "terms")

    def __init__(self, m, n, terms=None):
        self.m = m
        self.n = n
        self.terms = {}
        if terms:
            for exps, c in terms.items():
                if not isinstance(c, CycloNumber):
                    c = CycloNumber.from_rational(m, c)
                if not c.is_zero():
                    self.terms[tuple(exps)] = c

    @classmethod
    def zero(cls, m, n):
        return cls(m, n)

    @classmethod
    def constant(cls, m, n, value):
        return cls(m, n, {(0,) * n: value})

    @classmethod
    def variable(cls, m, n, i):
        """x_i, 1-based."""
        exps = [0] * n
        exps[i - 1] = 1
        return cls(m, n, {tuple(exps): 1})

    @classmethod
    def monomial(cls, m, n, exps, coeff=1):
        return cls(m, n, {tuple(exps): coeff})

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=grlex_key)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), CycloNumber.zero(self.m))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        result = Poly(self.m, self.n)
        result.terms = out
        return result

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        result = Poly(self.m, self.n)
        result.terms = {e: -c for e, c in self.terms.items()}
        return result

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNumber)):
            return self.scale(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        result = Poly(self.m, self.n)
        result.terms = out
        return result

    __rmul__ = __mul__

    def scale(self, c):
        if not isinstance(c, CycloNumber):
            c = CycloNumber.from_rational(self.m, c)
        if c.is_zero():
            return Poly.zero(self.m, self.n)
        result = Poly(self.m, self.n)
        result.terms = {e: v * c for e, v in self.terms.items()}
        return result

    def shift(self, exps):
        """Multiply by the monomial x^exps."""
        result = Poly(self.m, self.n)
        result.terms = {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()}
        return result

    def derivative(self, a):
        """Partial derivative in x_a (1-based)."""
        out = {}
        for e, c in self.terms.items():
            k = e[a - 1]
            if k:
                e2 = e[: a - 1] + (k - 1,) + e[a:]
                out[e2] = c * k
        result = Poly(self.m, self.n)
        result.terms = out
        return result

    def divide_exact(self, divisor):
        """Exact division; raises ExactDivisionError on a nonzero remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead = divisor.leading_monomial()
        lead_coeff_inv = divisor.terms[lead].inverse()
        rest = [(e, c) for e, c in divisor.terms.items() if e != lead]
        quo = {}
        rem = dict(self.terms)
        while rem:
            e = max(rem, key=grlex_key)
            diff = tuple(a - b for a, b in zip(e, lead))
            if any(d < 0 for d in diff):
                raise ExactDivisionError(
                    f"monomial {e} not divisible by leading term {lead}"
                )
            q = rem.pop(e) * lead_coeff_inv
            quo[diff] = q
            for e2, c2 in rest:
                e3 = tuple(a + b for a, b in zip(diff, e2))
                s = rem.get(e3, CycloNumber.zero(self.m)) - q * c2
                if s.is_zero():
                    rem.pop(e3, None)
                else:
                    rem[e3] = s
        result = Poly(self.m, self.n)
        result.terms = quo
        return result

    def galois(self, t):
        result = Poly(self.m, self.n)
        result.terms = {e: c.galois(t) for e, c in self.terms.items()}
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.m == other.m
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            mono = "*".join(
                f"x{i+1}" if k == 1 else f"x{i+1}^{k}" for i, k in enumerate(e) if k
            )
            c = self.terms[e]
            if not mono:
                bits.append(f"({c})")
            elif c == CycloNumber.one(self.m):
                bits.append(mono)
            else:
                bits.append(f"({c})*{mono}")
        return " + ".join(bits)


def act(w, f):
    """The contragredient action on polynomials: (w.f)(x) = f(w^(-1) x).

    On variables this is w.x_j = zeta^(-a_j) x_(perm(j)); a monomial x^e is
    sent to zeta^(-sum a_j e_j) times the monomial with permuted exponents.
    """
    if w.n != f.n:
        raise ValueError("variable count mismatch")
    out = {}
    for e, c in f.terms.items():
        twist = -sum(a * k for a, k in zip(w.exps, e))
        e2 = [0] * f.n
        for j in range(f.n):
            e2[w.perm[j]] = e[j]
        out[tuple(e2)] = c * zeta_pow(f.m, twist)
    result = Poly(f.m, f.n)
    result.terms = out
    return result


def fundamental_invariants(params):
    """Generators of the invariant ring: e_i(x_1^m, ..., x_n^m) for
    i = 1..n-1 together with (x_1 ... x_n)^d."""
    m, n, d = params.m, params.n, params.d
    polys = []
    for i in range(1, n):
        terms = {}
        for subset in _subsets(n, i):
            e = [0] * n
            for j in subset:
                e[j] = m
            terms[tuple(e)] = 1
        polys.append(Poly(m, n, terms))
    polys.append(Poly.monomial(m, n, (d,) * n))
    return polys


def _subsets(n, k):
    from itertools import combinations

    return combinations(range(n), k)


def coinvariant_hilbert(params):
    """Coefficients of prod (1 - t^d_i) / (1 - t)^n for the invariant
    degrees d_i = m, 2m, ..., (n-1)m, nd.  Polynomial of top degree
    m*C(n,2) + nd - n with coefficient sum |W|."""
    degrees = [params.m * i for i in range(1, params.n)] + [params.n * params.d]
    # each factor (1 - t^d)/(1 - t) = 1 + t + ... + t^(d-1)
    coeffs = [1]
    for deg in degrees:
        out = [0] * (len(coeffs) + deg - 1)
        for i, c in enumerate(coeffs):
            for j in range(deg):
                out[i + j] += c
        coeffs = out
    return coeffs
