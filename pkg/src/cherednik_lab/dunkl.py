"""Dunkl operators for G(m,p,n), parameter handling and the central element.

The operator realizing y_a on polynomials is

    T_a f = d/dx_a f
          + (1/x_a) * sum_{j=1}^{d-1} kappa_j sum_{r<d} zeta^(prj) (s_a^(pr) . f)
          + kappa00 * sum_{hyperplanes x_i - zeta^l x_j} (delta_ia - zeta^l delta_ja)
                      * (f - sigma_ij^(l) . f) / (x_i - zeta^l x_j).

Both difference quotients are exact polynomial divisions; a failed division
means the formula is implemented wrong, so it raises.  The same operator has
a closed "collapsed" form obtained by summing the twists over l, which makes
every matrix entry rational: summing zeta^(ls) over all l kills everything
except s = 0 mod m.  The collapsed form is used by the quotient engine; the
two routes are property-tested against each other.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .cyclotomic import CycloNumber, zeta_pow
from .groups import GroupParams, MonomialMatrix, sigma_reflection, ext_power_char
from .polynomials import Poly, act

__all__ = [
    "CherednikParams",
    "sample_cherednik_params",
    "relation_target",
    "dunkl_apply",
    "eq2_rhs_apply",
    "commutator_check",
    "parameter_embed",
    "GroupAlgebraElement",
    "z_element",
    "z_scalar",
    "euler_eigenvalue",
    "grading_shift",
    "collapsed_dunkl_terms",
]

RELATIONS = ("none", "unit", "main")


def relation_target(params, relation):
    """Value imposed on d*kappa_1 + m(n-1)*kappa00 by the relation flag."""
    if relation == "unit":
        return Fraction(-1)
    if relation == "main":
        return Fraction(-1 - params.m * (params.n - 1) - params.d)
    return None


@dataclass(frozen=True)
class CherednikParams:
    """Rational parameters (kappa00; kappa_1..kappa_{d-1}) with kappa_0 = kappa_d = 0.

    In the n = 2, p even regime the two sigma classes carry one parameter
    each; this artifact always uses a common value, so kappa00_odd and
    kappa00_even are aliases of kappa00.
    """

    kappa00: Fraction
    kappa: tuple
    relation: str = "none"

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        object.__setattr__(self, "kappa00", Fraction(self.kappa00))
        object.__setattr__(self, "kappa", tuple(Fraction(k) for k in self.kappa))

    @property
    def d(self):
        return len(self.kappa) + 1

    @property
    def kappa00_odd(self):
        return self.kappa00

    @property
    def kappa00_even(self):
        return self.kappa00

    def kappa_at(self, j):
        """kappa_j for any integer j, with the convention kappa_{j mod d},
        kappa_0 = 0."""
        j %= self.d
        return Fraction(0) if j == 0 else self.kappa[j - 1]

    def check_relation(self, params):
        """Verify the linear relation recorded in the flag (None allowed)."""
        if params.d != self.d:
            raise ValueError(f"parameter count is for d={self.d}, group has d={params.d}")
        target = relation_target(params, self.relation)
        if target is None:
            return True
        value = params.d * self.kappa_at(1) + params.m * (params.n - 1) * self.kappa00
        return value == target

    def denominator_scale(self):
        """Least positive integer clearing all parameter denominators."""
        scale = self.kappa00.denominator
        for k in self.kappa:
            scale = scale * k.denominator // gcd(scale, k.denominator)
        return scale


def sample_cherednik_params(params, relation, seed):
    """Seeded generic parameters on the requested hyperplane.

    kappa00 and kappa_2..kappa_{d-1} are random rationals with 30-bit
    numerators (denominators up to 2^10); kappa_1 solves the imposed
    relation, or is sampled too when no relation is imposed.  The PRNG is
    Python's Mersenne Twister seeded with the given integer.
    """
    rng = random.Random(seed)

    def draw():
        num = 0
        while num == 0:
            num = rng.randint(-(2**30) + 1, 2**30 - 1)
        return Fraction(num, rng.randint(1, 2**10))

    kappa00 = draw()
    tail = [draw() for _ in range(max(params.d - 2, 0))]
    target = relation_target(params, relation)
    if target is None:
        kappa1 = draw()
    else:
        kappa1 = (target - params.m * (params.n - 1) * kappa00) / params.d
    cp = CherednikParams(kappa00, tuple([kappa1] + tail), relation)
    assert cp.check_relation(params)
    return cp


def _alpha_poly(params, i, j, ell):
    """The linear form x_i - zeta^ell x_j (1-based i < j)."""
    m, n = params.m, params.n
    return Poly.variable(m, n, i) - Poly.variable(m, n, j) * zeta_pow(m, ell)


def dunkl_apply(params, cp, a, f, method="division"):
    """Apply the Dunkl operator for coordinate a (1-based) to f."""
    if method == "collapsed":
        return _dunkl_collapsed(params, cp, a, f)
    if method != "division":
        raise ValueError(f"unknown method {method!r}")
    m, n, d, p = params.m, params.n, params.d, params.p
    out = f.derivative(a)
    if d > 1:
        acc = Poly.zero(m, n)
        for j in range(1, d):
            kj = cp.kappa_at(j)
            if kj == 0:
                continue
            for r in range(d):
                w = MonomialMatrix(m, range(n), _scaled_exps(n, a, p * r))
                acc = acc + act(w, f).scale(zeta_pow(m, p * r * j) * kj)
        if not acc.is_zero():
            out = out + acc.divide_exact(Poly.variable(m, n, a))
    if cp.kappa00:
        for b in range(1, n + 1):
            if b == a:
                continue
            i, j = (a, b) if a < b else (b, a)
            for ell in range(m):
                sigma = sigma_reflection(params, i, j, ell)
                numer = f - act(sigma, f)
                if numer.is_zero():
                    continue
                quo = numer.divide_exact(_alpha_poly(params, i, j, ell))
                coeff = CycloNumber.one(m) if a == i else -zeta_pow(m, ell)
                out = out + quo.scale(coeff * cp.kappa00)
    return out


def _scaled_exps(n, a, e):
    exps = [0] * n
    exps[a - 1] = e
    return exps


def collapsed_dunkl_terms(params, cp, a, exps):
    """Image of the monomial x^exps under T_a as {exponent tuple: Fraction}.

    Summing the hyperplane twists in closed form leaves only rational
    coefficients: the derivative and cyclic parts give e_a + d*kappa_{[e_a]}
    on x^(e - delta_a), and each pair {a,b} contributes +-m*kappa00 on the
    surviving divided-difference monomials.
    """
    m, n, d = params.m, params.n, params.d
    out = {}

    def add(e, c):
        if c:
            out[e] = out.get(e, Fraction(0)) + c
            if not out[e]:
                del out[e]

    ea = exps[a - 1]
    if ea:
        e2 = exps[: a - 1] + (ea - 1,) + exps[a:]
        add(e2, ea + d * cp.kappa_at(ea))
    k00 = cp.kappa00
    if k00 == 0:
        return out
    for b in range(1, n + 1):
        if b == a:
            continue
        alpha, beta = exps[a - 1], exps[b - 1]
        base = min(alpha, beta)
        g = abs(alpha - beta)

        def emission(s, sign):
            # base^both then x_a^(g-1-s), x_b^(s) on top (a-side first)
            e2 = list(exps)
            e2[a - 1] = base + g - 1 - s
            e2[b - 1] = base + s
            add(tuple(e2), sign * m * k00)

        if a < b:
            if alpha > beta:
                start = 0  # s = 0 mod m
                sign = 1
            elif alpha < beta:
                start = g % m  # s = g mod m
                sign = -1
            else:
                continue
        else:
            if beta > alpha:  # the b-side exponent is the larger one
                start = (-1) % m  # s = -1 mod m
                sign = -1
            elif beta < alpha:
                start = (g - 1) % m  # s = g-1 mod m
                sign = 1
            else:
                continue
        if a < b:
            for s in range(start, g, m):
                emission(s, sign)
        else:
            # here the divided difference runs over x_b^(g-1-s) x_a^(s)
            for s in range(start, g, m):
                e2 = list(exps)
                e2[b - 1] = base + g - 1 - s
                e2[a - 1] = base + s
                add(tuple(e2), sign * m * k00)
    return out


def _dunkl_collapsed(params, cp, a, f):
    out = {}
    m = params.m
    for e, c in f.terms.items():
        for e2, q in collapsed_dunkl_terms(params, cp, a, e).items():
            s = out.get(e2)
            v = c * q
            s = v if s is None else s + v
            if s.is_zero():
                out.pop(e2, None)
            else:
                out[e2] = s
    result = Poly(m, params.n)
    result.terms = out
    return result


def eq2_rhs_apply(params, cp, a, b, f):
    """The group-algebra right-hand side of the defining commutation relation
    [y_a, x_b], applied to a polynomial."""
    m, n, d, p = params.m, params.n, params.d, params.p
    out = f if a == b else Poly.zero(m, n)
    if a == b and d > 1:
        for j in range(d):
            dk = cp.kappa_at(j + 1) - cp.kappa_at(j)
            if dk == 0:
                continue
            for r in range(d):
                w = MonomialMatrix(m, range(n), _scaled_exps(n, a, p * r))
                out = out + act(w, f).scale(zeta_pow(m, p * r * j) * dk)
    if cp.kappa00:
        one = CycloNumber.one(m)
        zero = CycloNumber.zero(m)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if a not in (i, j) or b not in (i, j):
                    continue
                for ell in range(m):
                    ci = (one if i == a else zero) - (zeta_pow(m, ell) if j == a else zero)
                    cj = (one if i == b else zero) - (zeta_pow(m, -ell) if j == b else zero)
                    coeff = ci * cj * cp.kappa00
                    if coeff.is_zero():
                        continue
                    out = out + act(sigma_reflection(params, i, j, ell), f).scale(coeff)
    return out


def commutator_check(params, cp, a, b, f, method="division"):
    """Verify [T_a, x_b] f = (right-hand side of the commutation relation) f."""
    xb = Poly.variable(params.m, params.n, b)
    lhs = dunkl_apply(params, cp, a, xb * f, method) - xb * dunkl_apply(params, cp, a, f, method)
    return lhs == eq2_rhs_apply(params, cp, a, b, f)


def parameter_embed(params, cp):
    """Parameters mu for the ambient group G(m,1,n): mu00 = kappa00 and
    mu_j = kappa_{j mod d} / p, so the mu sequence is d-periodic with zeros
    at the multiples of d.  The two Dunkl actions then agree on polynomials."""
    m = params.m
    ambient = GroupParams(m, 1, params.n)
    mu = tuple(cp.kappa_at(j) / params.p for j in range(1, m))
    return ambient, CherednikParams(cp.kappa00, mu, "none")


class GroupAlgebraElement:
    """Finitely supported Q(zeta_m)-combination of group elements."""

    def __init__(self, m, n, terms=None):
        self.m = m
        self.n = n
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if not isinstance(c, CycloNumber):
                    c = CycloNumber.from_rational(m, c)
                if not c.is_zero():
                    self.terms[w] = c

    def add_term(self, w, c):
        if not isinstance(c, CycloNumber):
            c = CycloNumber.from_rational(self.m, c)
        s = self.terms.get(w)
        s = c if s is None else s + c
        if s.is_zero():
            self.terms.pop(w, None)
        else:
            self.terms[w] = s

    def apply(self, f):
        out = Poly.zero(self.m, f.n)
        for w, c in self.terms.items():
            out = out + act(w, f).scale(c)
        return out

    def trace_ext_power(self, i):
        total = CycloNumber.zero(self.m)
        for w, c in self.terms.items():
            total = total + c * ext_power_char(w, i)
        return total

    def scalar_on_trivial(self):
        total = CycloNumber.zero(self.m)
        for c in self.terms.values():
            total = total + c
        return total


def z_element(params, cp):
    """The central group-algebra element built from the reflection data:
    sum_i sum_t kappa_t sum_j zeta^(ptj) s_i^(pj)
    + kappa00 sum_{i<j} sum_r (1 - sigma_ij^(r))."""
    m, n, d, p = params.m, params.n, params.d, params.p
    z = GroupAlgebraElement(m, n)
    for i in range(1, n + 1):
        for t in range(1, d):
            kt = cp.kappa_at(t)
            if kt == 0:
                continue
            for j in range(d):
                w = MonomialMatrix(m, range(n), _scaled_exps(n, i, p * j))
                z.add_term(w, zeta_pow(m, p * t * j) * kt)
    if cp.kappa00:
        ident = MonomialMatrix.identity(m, n)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for r in range(m):
                    z.add_term(ident, cp.kappa00)
                    z.add_term(sigma_reflection(params, i, j, r), -cp.kappa00)
    return z


def z_scalar(params, cp, i):
    """Scalar by which the central element acts on the i-th exterior power
    of the dual reflection space.

    Computed two independent ways: the closed form
    i*(d*kappa_1 + m(n-1)*kappa00), and the trace of the explicit
    group-algebra element divided by C(n,i).  A mismatch raises.
    """
    if not 0 <= i <= params.n:
        raise ValueError(f"exterior power {i} out of range")
    closed = i * (params.d * cp.kappa_at(1) + params.m * (params.n - 1) * cp.kappa00)
    traced = z_element(params, cp).trace_ext_power(i)
    direct = traced.to_rational() / comb(params.n, i)
    if direct != closed:
        raise AssertionError(
            f"z-scalar mismatch on exterior power {i}: closed {closed}, trace {direct}"
        )
    return closed


def grading_shift(params):
    """The global grading shift n + m*C(n,2)."""
    return params.n + params.m * comb(params.n, 2)


def euler_eigenvalue(params, cp, degree, i, shifted=False):
    """Eigenvalue of the Euler element on polynomial degree `degree` tensored
    with the i-th exterior power: degree - z_scalar(i).  With shifted=True
    the constant n + m*C(n,2) is subtracted (the grading element h)."""
    value = Fraction(degree) - z_scalar(params, cp, i)
    if shifted:
        value -= grading_shift(params)
    return value
