"""The finite lowest-weight quotient: singular vectors, graded structure,
equivariant characters, and the coinvariant-image checks.

The joint kernel of the Dunkl operators in the singular degree
r = m(n-1) + d + 1 generates an ideal I; the quotient of the polynomial
ring by I is the finite-dimensional module under study.  Because every
Dunkl matrix entry is rational (the twist sums collapse), the kernel and
the whole ideal have rational echelon bases, so all heavy elimination runs
over Z.  Characters pick up cyclotomic scalars only through the group
action on monomials.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .cyclotomic import CycloNumber, euler_phi, zeta_pow
from .dunkl import (
    collapsed_dunkl_terms,
    eq2_rhs_apply,
    grading_shift,
    sample_cherednik_params,
)
from .groups import conjugacy_classes, det_char, ext_power_char
from .linalg import DegreeContext, IntEchelon, flatten_family, int_nullspace
from .polynomials import Poly, act, coinvariant_hilbert, fundamental_invariants, monomials_of_degree

__all__ = [
    "GenericityError",
    "SingularSpace",
    "find_singular_space",
    "singular_space_with_retries",
    "QuotientModule",
    "build_quotient",
    "quotient_hilbert",
    "quotient_equiv_char",
    "det_ratio_series",
    "ce_tensor_char",
    "character_limit",
    "bgg_identity_check",
    "onedim_module_check",
    "coinvariant_image_check",
    "CoinvariantReport",
]


class GenericityError(RuntimeError):
    """The sampled parameters hit a non-generic locus."""


def _scaled_int_terms(params, cp, scale, a, exps):
    """Collapsed Dunkl emission of a monomial, cleared to integers by scale."""
    out = {}
    for e, q in collapsed_dunkl_terms(params, cp, a, exps).items():
        v = q * scale
        if v.denominator != 1:
            raise AssertionError("denominator scale does not clear Dunkl entries")
        out[e] = int(v)
    return out


@dataclass
class SingularSpace:
    """The joint Dunkl kernel in degree r: n rational polynomials."""

    params: object
    cp: object
    degree: int
    rows: list  # canonical primitive integer rows in the degree context
    ctx: DegreeContext

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        """Monic canonical basis as polynomials (rational coefficients)."""
        by_lead = {min(row): row for row in self.rows}
        out = []
        for lead in sorted(by_lead):
            row = by_lead[lead]
            f = _row_to_rational_poly(row, self.ctx, self.params.m)
            out.append(f * f.terms[self.ctx.monomials[lead]].inverse())
        return out

    def trace(self, w):
        """Trace of w acting on the span (the rows are back-reduced, so the
        diagonal coordinate of w.b_i is read off at the pivot monomial)."""
        total = CycloNumber.zero(self.params.m)
        for row in self.rows:
            lead = min(row)
            pivot_mono = self.ctx.monomials[lead]
            f = _row_to_rational_poly(row, self.ctx, self.params.m)
            image = act(w, f)
            total = total + image.coeff(pivot_mono) * Fraction(1, row[lead])
        return total

    def character_matches_dual_reflection(self, reps):
        """Compare the span's character with the dual reflection character."""
        table = []
        for w in reps:
            got = self.trace(w)
            want = ext_power_char(w, 1)
            table.append((w, got, want, got == want))
        return table


def _row_to_rational_poly(row, ctx, m):
    terms = {ctx.monomials[col]: CycloNumber.from_rational(m, v) for col, v in row.items()}
    return Poly(m, ctx.n, terms)


def find_singular_space(params, cp):
    """Joint kernel of the stacked Dunkl operators on the degree-r piece.

    Raises GenericityError unless the kernel has dimension exactly n.
    """
    if cp.relation != "main":
        raise ValueError("singular space is sought on the main parameter hyperplane")
    if not cp.check_relation(params):
        raise ValueError("parameters do not satisfy the main relation")
    m, n, r = params.m, params.n, params.r
    ctx = DegreeContext(m, n, r, width=1)
    ctx_target = DegreeContext(m, n, r - 1, width=1)
    scale = cp.denominator_scale()
    constraints = {}
    for a in range(1, n + 1):
        for src_idx, e in enumerate(ctx.monomials):
            for e2, v in _scaled_int_terms(params, cp, scale, a, e).items():
                key = (a, ctx_target.index[e2])
                constraints.setdefault(key, {})[src_idx] = v
    kernel = int_nullspace(constraints.values(), range(ctx.dim))
    if len(kernel) != n:
        raise GenericityError(
            f"singular space in degree {r} has dimension {len(kernel)}, expected {n}; "
            f"parameters kappa00={cp.kappa00}, kappa={cp.kappa}"
        )
    ech = IntEchelon()
    for row in kernel:
        ech.insert(row)
    ech.finalize()
    rows = [ech.rows[lead] for lead in sorted(ech.rows)]
    return SingularSpace(params, cp, r, rows, ctx)


def singular_space_with_retries(params, relation, seed, attempts=3):
    """Sample parameters and locate the singular space, resampling on
    genericity failures; derived retry seeds are seed*1000 + attempt."""
    failures = []
    for attempt in range(attempts):
        cp = sample_cherednik_params(params, relation, seed * 1000 + attempt)
        try:
            return cp, find_singular_space(params, cp)
        except GenericityError as exc:
            failures.append(str(exc))
    raise GenericityError(
        "singular space not of the expected dimension after "
        f"{attempts} samples (seed {seed}): " + " | ".join(failures)
    )


@dataclass
class DegreeData:
    ctx: DegreeContext
    echelon: IntEchelon
    std: list  # standard (non-pivot) monomials, grlex-descending

    @property
    def ideal_dim(self):
        return self.echelon.rank

    @property
    def quotient_dim(self):
        return len(self.std)


class QuotientModule:
    """Degreewise data of the quotient of the polynomial ring by the ideal
    generated by the singular space, for degrees 0 .. n(r-1)+1."""

    def __init__(self, singular):
        self.params = singular.params
        self.cp = singular.cp
        self.singular = singular
        self.top = singular.params.n * (singular.params.r - 1)
        self.data = []
        self._trace_cache = {}
        self._build()
        self._check_dunkl_stability()

    def _build(self):
        params = self.params
        m, n, r = params.m, params.n, params.r
        gens = [
            {self.singular.ctx.monomials[col]: v for col, v in row.items()}
            for row in self.singular.rows
        ]
        for k in range(self.top + 2):
            ctx = DegreeContext(m, n, k, width=1)
            ech = IntEchelon()
            if k >= r:
                for gen in gens:
                    for shift in monomials_of_degree(n, k - r):
                        row = {}
                        for e, v in gen.items():
                            e2 = tuple(a + b for a, b in zip(e, shift))
                            row[ctx.index[e2]] = v
                        ech.insert(row)
            ech.finalize()
            pivots = set(ech.rows)
            std = [e for i, e in enumerate(ctx.monomials) if i not in pivots]
            self.data.append(DegreeData(ctx, ech, std))

    def _check_dunkl_stability(self):
        """Every Dunkl operator must map the degree-k part of the ideal into
        the degree-(k-1) part; checked on all echelon basis rows."""
        params = self.params
        scale = self.cp.denominator_scale()
        emission_cache = {}
        for k in range(params.r, self.top + 2):
            cur = self.data[k]
            below = self.data[k - 1]
            for a in range(1, params.n + 1):
                table = emission_cache.setdefault((k, a), {})
                for lead in sorted(cur.echelon.rows):
                    row = cur.echelon.rows[lead]
                    image = {}
                    for col, v in row.items():
                        e = cur.ctx.monomials[col]
                        terms = table.get(e)
                        if terms is None:
                            terms = _scaled_int_terms(params, self.cp, scale, a, e)
                            table[e] = terms
                        for e2, c in terms.items():
                            tcol = below.ctx.index[e2]
                            s = image.get(tcol, 0) + v * c
                            if s:
                                image[tcol] = s
                            else:
                                image.pop(tcol, None)
                    if below.echelon.reduce(image):
                        raise AssertionError(
                            f"ideal is not Dunkl-stable: T_{a} of a degree-{k} "
                            "basis element leaves the ideal"
                        )
            emission_cache.clear()

    # -- dimensions ----------------------------------------------------

    def dimensions(self):
        """Quotient dimensions in degrees 0 .. top+1."""
        return [d.quotient_dim for d in self.data]

    def total_dimension(self):
        return sum(d.quotient_dim for d in self.data)

    # -- normal forms ---------------------------------------------------

    def normal_form(self, f, degree=None):
        """Exact normal form of a homogeneous polynomial modulo the ideal,
        supported on standard monomials (cyclotomic coefficients allowed)."""
        if f.is_zero():
            return f
        if not f.is_homogeneous():
            raise ValueError("normal form needs a homogeneous polynomial")
        k = f.degree() if degree is None else degree
        if k >= len(self.data):
            raise ValueError(f"degree {k} beyond built range")
        data = self.data[k]
        phi = euler_phi(self.params.m)
        parts = []
        for j in range(phi):
            row = {}
            for e, c in f.terms.items():
                q = c.coeffs[j]
                if q:
                    row[data.ctx.index[e]] = q
            parts.append(_fraction_normal_form(data.echelon, row))
        terms = {}
        for j, part in enumerate(parts):
            zj = zeta_pow(self.params.m, j)
            for col, q in part.items():
                e = data.ctx.monomials[col]
                add = zj * q
                s = terms.get(e)
                s = add if s is None else s + add
                if s.is_zero():
                    terms.pop(e, None)
                else:
                    terms[e] = s
        out = Poly(self.params.m, self.params.n)
        out.terms = terms
        return out

    def contains_in_ideal(self, f):
        return self.normal_form(f).is_zero()

    # -- characters -----------------------------------------------------

    def trace(self, w, k):
        """Trace of w on the degree-k piece of the quotient.

        In the standard-monomial basis, w sends the class of x^e to a
        scalar times the class of the permuted monomial; only standard
        targets equal to e and pivot targets whose reduced tail touches e
        contribute to the diagonal.
        """
        data = self.data[k]
        m = self.params.m
        total = CycloNumber.zero(m)
        pivot_rows = data.echelon.rows
        index = data.ctx.index
        for e in data.std:
            twist = -sum(a * x for a, x in zip(w.exps, e))
            e2 = [0] * len(e)
            for j in range(len(e)):
                e2[w.perm[j]] = e[j]
            e2 = tuple(e2)
            if e2 == e:
                total = total + zeta_pow(m, twist)
                continue
            col2 = index[e2]
            row = pivot_rows.get(col2)
            if row is None:
                continue
            c = row.get(index[e])
            if c:
                total = total + zeta_pow(m, twist) * Fraction(-c, row[col2])
        return total

    def trace_series(self, w):
        """Graded trace of w through degree top (exact, coefficients in Q(zeta))."""
        key = (w.perm, w.exps)
        cached = self._trace_cache.get(key)
        if cached is None:
            cached = [self.trace(w, k) for k in range(self.top + 1)]
            self._trace_cache[key] = cached
        return list(cached)


def _fraction_normal_form(ech, row):
    """Reduce a Fraction-valued row against a finalized integer echelon,
    preserving the exact scale (no content stripping)."""
    if not ech.finalized:
        raise RuntimeError("echelon must be finalized")
    row = {c: Fraction(v) for c, v in row.items() if v}
    hits = sorted(c for c in row if c in ech.rows)
    for c in hits:
        if c not in row:
            continue
        piv = ech.rows[c]
        factor = row[c] / piv[c]
        for col, v in piv.items():
            s = row.get(col, Fraction(0)) - factor * v
            if s:
                row[col] = s
            else:
                row.pop(col, None)
    return row


def build_quotient(singular):
    """Construct the quotient module generated by the singular space."""
    return QuotientModule(singular)


def quotient_hilbert(q):
    """(shift, coefficients): the per-degree quotient dimensions together
    with the reported global grading shift -(n + m*C(n,2))."""
    dims = q.dimensions()[: q.top + 1]
    return -grading_shift(q.params), dims


def quotient_equiv_char(q, w):
    """Graded trace sequence of a class representative on the quotient."""
    return q.trace_series(w)


def _series_inverse(coeffs, length, m):
    """Truncated inverse of a power series with constant term 1."""
    inv = [CycloNumber.zero(m) for _ in range(length)]
    inv[0] = CycloNumber.one(m)
    for k in range(1, length):
        acc = CycloNumber.zero(m)
        for j in range(1, min(k, len(coeffs) - 1) + 1):
            if not coeffs[j].is_zero():
                acc = acc + coeffs[j] * inv[k - j]
        inv[k] = -acc
    return inv


def _series_mul(a, b, length, m):
    out = [CycloNumber.zero(m) for _ in range(length)]
    for i, x in enumerate(a[:length]):
        if x.is_zero():
            continue
        for j, y in enumerate(b[: length - i]):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def _cycle_eigendata(w):
    return [(len(cyc), e) for cyc, e in w.cycles()]


def det_ratio_series(params, w, length):
    """Power-series coefficients of det_{h*}(1 - t^r w) / det_{h*}(1 - t w).

    Both determinants factor over the permutation cycles of w: a cycle of
    length c with exponent sum e has h*-eigenvalue product zeta^(-e), giving
    factors 1 - zeta^(-e) t^(rc) and 1 - zeta^(-e) t^c.
    """
    m, r = params.m, params.r
    num = [CycloNumber.one(m)]
    den = [CycloNumber.one(m)]

    def poly_mul_sparse(a, degree, coeff):
        out = [CycloNumber.zero(m) for _ in range(len(a) + degree)]
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            out[i] = out[i] + x
            out[i + degree] = out[i + degree] + x * coeff
        return out

    for c, e in _cycle_eigendata(w):
        lam = -zeta_pow(m, -e)
        num = poly_mul_sparse(num, r * c, lam)
        den = poly_mul_sparse(den, c, lam)
    num = num + [CycloNumber.zero(m)] * max(0, length - len(num))
    inv = _series_inverse(den, length, m)
    return _series_mul(num, inv, length, m)


def ce_tensor_char(params, w, length=None):
    """Graded trace of w on the rank-one tensor model: the n-fold tensor
    power of C[u]/(u^r) with the cyclic generator scaling u by zeta^(-1) and
    the symmetric group permuting the factors.

    Each permutation cycle of length c and exponent sum e contributes
    sum_{k<r} zeta^(-ek) t^(ck); w may be any monomial matrix over the same
    root of unity (membership in the subgroup is not required).
    """
    m, r = params.m, params.r
    if w.m != m:
        raise ValueError("root-of-unity order mismatch")
    top = w.n * (r - 1)
    length = top + 1 if length is None else length
    out = [CycloNumber.one(m)] + [CycloNumber.zero(m)] * (length - 1)
    for c, e in _cycle_eigendata(w):
        factor = [CycloNumber.zero(m) for _ in range(min(length, c * (r - 1) + 1))]
        for k in range(r):
            if c * k < len(factor):
                factor[c * k] = zeta_pow(m, -e * k)
        out = _series_mul(out, factor, length, m)
    return out


def character_limit(params, w):
    """The t -> 1 value of the det ratio: r to the power dim ker(1 - w);
    eigenvalue factors with eigenvalue different from 1 cancel in the limit."""
    return params.r ** w.fixed_space_dim()


def bgg_identity_check(params, w):
    """Check det_{h*}(1 - t^r w) = sum_i (-1)^i chi_{Lambda^i h*}(w) t^(ir)
    as exact polynomials in t."""
    m, n, r = params.m, params.n, params.r
    lhs = {0: CycloNumber.one(m)}
    for c, e in _cycle_eigendata(w):
        new = {}
        lam = zeta_pow(m, -e)
        for deg, coeff in lhs.items():
            new[deg] = new.get(deg, CycloNumber.zero(m)) + coeff
            key = deg + r * c
            new[key] = new.get(key, CycloNumber.zero(m)) - coeff * lam
        lhs = {k: v for k, v in new.items() if not v.is_zero()}
    rhs = {}
    for i in range(n + 1):
        coeff = ext_power_char(w, i)
        if i % 2:
            coeff = -coeff
        if not coeff.is_zero():
            rhs[i * r] = coeff
    return lhs == rhs


def onedim_module_check(params, cp):
    """Whether every defining commutation relation acts by zero on the
    one-dimensional candidate module (trivial group action, both variable
    families acting by zero).

    Returns (passed, table) where table maps (a, b) to the exact scalar by
    which the relation acts; the diagonal scalar is
    1 + d*kappa_1 + m(n-1)*kappa00.
    """
    m, n = params.m, params.n
    one = Poly.constant(m, n, 1)
    table = {}
    passed = True
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            scalar = eq2_rhs_apply(params, cp, a, b, one).coeff((0,) * n)
            if a == b:
                expected = 1 + params.d * cp.kappa_at(1) + m * (n - 1) * cp.kappa00
                if scalar != CycloNumber.from_rational(m, expected):
                    raise AssertionError(
                        "diagonal commutation scalar disagrees with the closed form"
                    )
            table[(a, b)] = scalar
            if not scalar.is_zero():
                passed = False
    return passed, table


@dataclass
class CoinvariantReport:
    """Outcome of the coinvariant-image checks, clause by clause."""

    isotype_degrees: dict
    lowest_vector: Poly
    lowest_degree: int
    unique_isotype: bool
    invariants_annihilate: bool
    image_dims: list
    expected_dims: list
    dims_match: bool
    socle_survives: bool
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures


def coinvariant_image_check(q, class_data=None):
    """Four checks on the image of the polynomial ring inside the quotient.

    (a) the top exterior character appears exactly once among all graded
        pieces, in degree n + m*C(n,2), spanned by a vector v;
    (b) every fundamental invariant multiplies v into the ideal;
    (c) the graded dimensions of (polynomial ring).v match the coinvariant
        Hilbert series shifted by deg v;
    (d) the socle degree m*C(n,2) + nd - n survives (dimension 1 there).
    """
    params = q.params
    m, n = params.m, params.n
    shift = grading_shift(params)
    order = params.order
    if class_data is None:
        class_data = conjugacy_classes(params)
    failures = []

    # (a) isotype multiplicities from the cached trace series
    dual_det = {}
    for cls in class_data:
        rep = cls[0]
        dual_det[rep] = det_char(rep.inverse())
    mults = {}
    for k in range(q.top + 1):
        acc = CycloNumber.zero(m)
        for cls in class_data:
            rep = cls[0]
            acc = acc + dual_det[rep] * q.trace(rep, k) * len(cls)
        mult = (acc * Fraction(1, order)).to_rational()
        if mult.denominator != 1:
            raise AssertionError(f"non-integral isotype multiplicity in degree {k}")
        if mult:
            mults[k] = int(mult)
    unique = mults == {shift: 1}
    if not unique:
        failures.append(f"(a) top exterior isotype multiplicities {mults}, expected {{{shift}: 1}}")

    # locate the lowest vector by averaging standard monomials of the degree
    vbar = None
    elements = [w for cls in class_data for w in cls]
    for e in q.data[shift].std:
        mono = Poly.monomial(m, n, e)
        acc = Poly.zero(m, n)
        for w in elements:
            acc = acc + act(w, mono).scale(det_char(w.inverse()))
        if acc.is_zero():
            continue
        candidate = q.normal_form(acc, shift)
        if not candidate.is_zero():
            vbar = candidate
            break
    if vbar is None:
        failures.append("(a) no nonzero projection found in the expected degree")
        return CoinvariantReport(mults, Poly.zero(m, n), shift, unique, False, [], [], False, False, failures)

    # (b) fundamental invariants annihilate the vector modulo the ideal
    invariants_ok = True
    for f in fundamental_invariants(params):
        if f.degree() + shift > q.top + 1:
            raise ValueError("quotient not built far enough for the invariant check")
        if not q.contains_in_ideal(f * vbar):
            invariants_ok = False
            failures.append(f"(b) invariant of degree {f.degree()} does not annihilate the vector")

    # (c) graded dimensions of the cyclic module generated by the vector
    expected = coinvariant_hilbert(params)
    phi = euler_phi(m)
    extras = [vbar]
    dims = [1]
    for offset in range(1, len(expected)):
        k = shift + offset
        flat_ctx = DegreeContext(m, n, k)
        ech = IntEchelon()
        # span at this degree: x_i * (previous extras), reduced mod the ideal
        candidates = []
        for g in extras:
            for i in range(1, n + 1):
                candidates.append(q.normal_form(g * Poly.variable(m, n, i), k))
        kept = []
        for cand in candidates:
            if cand.is_zero():
                continue
            grew = False
            for row in flatten_family(cand, flat_ctx):
                if ech.insert(row):
                    grew = True
            if grew:
                kept.append(cand)
        if ech.rank % phi:
            raise AssertionError("flattened rank not divisible by phi(m)")
        dims.append(ech.rank // phi)
        extras = kept
    dims_match = dims == expected
    if not dims_match:
        failures.append(f"(c) image dimensions {dims} differ from coinvariant Hilbert {expected}")

    # (d) the socle degree survives with dimension one
    socle_offset = m * comb(n, 2) + n * params.d - n
    socle_ok = len(dims) == socle_offset + 1 and dims[-1] == 1
    if not socle_ok:
        failures.append(f"(d) socle dimension at offset {socle_offset} is not 1: {dims[-1:]}")

    return CoinvariantReport(
        isotype_degrees=mults,
        lowest_vector=vbar,
        lowest_degree=shift,
        unique_isotype=unique,
        invariants_annihilate=invariants_ok,
        image_dims=dims,
        expected_dims=expected,
        dims_match=dims_match,
        socle_survives=socle_ok,
        failures=failures,
    )
