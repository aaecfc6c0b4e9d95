"""Fraction-free exact linear algebra over Q and Q(zeta_m).

Vectors are sparse integer rows (dict column -> int).  Rows are kept
primitive: after every pivot step the content is divided out, which is what
keeps coefficient growth under control.  Columns are integers with the
convention that a SMALLER index is an earlier pivot position; the leading
entry of a row is its minimum key.

Linear algebra over Q(zeta_m) is reduced to Q by flattening: a polynomial f
contributes the phi(m) rows zeta^j f (j < phi), each written out in the
coordinates of the power basis.  The Q-span of the flattened family is
closed under multiplication by zeta, and for such spans every pivot
monomial carries exactly phi pivot rows, so Q(zeta)-dimensions are the
integer row counts divided by phi and the non-pivot monomials represent a
basis of the quotient.
"""

from fractions import Fraction
from math import gcd

from .cyclotomic import CycloNumber, euler_phi
from .polynomials import Poly, grlex_key, monomials_of_degree

__all__ = [
    "IntEchelon",
    "DegreeContext",
    "flatten_poly",
    "row_to_poly",
    "int_nullspace",
    "span_rank",
    "ideal_dim_in_degree",
    "GradedSubspace",
]


def strip_content(row):
    """Divide a row by its content and return it (empty row allowed)."""
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        for c in row:
            row[c] //= g
    if row[min(row)] < 0:
        for c in row:
            row[c] = -row[c]
    return row


def _eliminate(row, piv, col):
    """row := (a/g) * row - (b/g) * piv with a = piv[col], b = row[col]."""
    a = piv[col]
    b = row[col]
    g = gcd(a, b)
    ca = a // g
    cb = b // g
    if ca != 1:
        for c in row:
            row[c] *= ca
    for c, v in piv.items():
        s = row.get(c, 0) - cb * v
        if s:
            row[c] = s
        else:
            row.pop(c, None)


class IntEchelon:
    """Sparse row echelon basis of a Q-subspace, primitive integer rows."""

    __slots__ = ("rows", "finalized")

    def __init__(self):
        self.rows = {}
        self.finalized = False

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, row):
        """Reduce the leading entry against pivots; returns the residual row."""
        while row:
            lead = min(row)
            piv = self.rows.get(lead)
            if piv is None:
                return row
            _eliminate(row, piv, lead)
            strip_content(row)
        return row

    def insert(self, row):
        """Insert a row (consumed); True when the rank grew."""
        row = self.reduce(dict(row))
        if not row:
            return False
        strip_content(row)
        self.rows[min(row)] = row
        self.finalized = False
        return True

    def contains(self, row):
        return not self.reduce(dict(row))

    def finalize(self):
        """Back-reduce to the canonical reduced form: every row is primitive,
        has positive leading entry, and its tail avoids all pivot columns."""
        if self.finalized:
            return self
        for lead in sorted(self.rows, reverse=True):
            row = self.rows[lead]
            hits = sorted(c for c in row if c != lead and c in self.rows)
            for c in hits:
                _eliminate(row, self.rows[c], c)
            strip_content(row)
        self.finalized = True
        return self

    def normal_form(self, row):
        """Fully reduce a row modulo the subspace (requires finalize())."""
        if not self.finalized:
            raise RuntimeError("normal_form requires a finalized echelon")
        row = dict(row)
        hits = sorted(c for c in row if c in self.rows)
        for c in hits:
            if c in row:
                _eliminate(row, self.rows[c], c)
        strip_content(row)
        return row

    def pivot_columns(self):
        return sorted(self.rows)


def int_nullspace(constraint_rows, columns):
    """Primitive integer basis of the common kernel of the constraints.

    Returns one vector per free column, ordered by free column index.
    """
    ech = IntEchelon()
    for row in constraint_rows:
        ech.insert(dict(row))
    ech.finalize()
    pivots = set(ech.rows)
    basis = []
    for f in columns:
        if f in pivots:
            continue
        vec = {f: 1}
        scale = 1
        for p, row in ech.rows.items():
            c = row.get(f)
            if not c:
                continue
            a = row[p]
            g = gcd(scale, a)
            factor = a // g
            if factor != 1:
                for col in vec:
                    vec[col] *= factor
                scale *= factor
            vec[p] = -c * (scale // a)
        strip_content(vec)
        basis.append(vec)
    return basis


class DegreeContext:
    """Column bookkeeping for one homogeneous degree.

    Column (monomial index i, basis coordinate j) gets index i*width + j.
    width = phi(m) for genuine cyclotomic coefficients, 1 for the purely
    rational mode used by the quotient engine.
    """

    def __init__(self, m, n, degree, width=None):
        self.m = m
        self.n = n
        self.degree = degree
        self.monomials = monomials_of_degree(n, degree)
        self.index = {e: i for i, e in enumerate(self.monomials)}
        self.width = euler_phi(m) if width is None else width

    @property
    def dim(self):
        return len(self.monomials)

    def column(self, exps, j=0):
        return self.index[exps] * self.width + j

    def monomial_of_column(self, col):
        return self.monomials[col // self.width]

    def columns(self):
        return range(len(self.monomials) * self.width)


def flatten_poly(f, ctx):
    """One integer row for f (denominators cleared); rational coordinates
    of every coefficient are spread over the width of the context."""
    den = 1
    for c in f.terms.values():
        for q in c.coeffs[: ctx.width]:
            den = den * q.denominator // gcd(den, q.denominator)
        if ctx.width == 1 and any(c.coeffs[1:]):
            raise ValueError("polynomial is not rational in a width-1 context")
    row = {}
    for e, c in f.terms.items():
        base = ctx.index[e] * ctx.width
        for j in range(ctx.width):
            q = c.coeffs[j]
            if q:
                row[base + j] = int(q * den)
    return row


def flatten_family(f, ctx):
    """Flattened rows of zeta^j f for j < phi(m): the zeta-closed family."""
    from .cyclotomic import zeta_pow

    if ctx.width == 1:
        return [flatten_poly(f, ctx)]
    return [flatten_poly(f * zeta_pow(f.m, j), ctx) for j in range(ctx.width)]


def row_to_poly(row, ctx, m=None):
    """Interpret an integer row as a polynomial with cyclotomic coefficients."""
    m = ctx.m if m is None else m
    phi = euler_phi(m)
    coeffs = {}
    for col, v in row.items():
        i, j = divmod(col, ctx.width)
        e = ctx.monomials[i]
        vec = coeffs.setdefault(e, [Fraction(0)] * phi)
        vec[j] += v
    terms = {e: CycloNumber(m, tuple(vec)) for e, vec in coeffs.items()}
    return Poly(m, ctx.n, terms)


def _context_for(polys):
    degrees = {f.degree() for f in polys}
    if len(degrees) != 1:
        raise ValueError("expected homogeneous polynomials of one common degree")
    f0 = polys[0]
    return DegreeContext(f0.m, f0.n, degrees.pop())


def span_rank(polys):
    """Dimension over Q(zeta_m) of the span of homogeneous polynomials."""
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        return 0
    if not all(f.is_homogeneous() for f in polys):
        raise ValueError("span_rank expects homogeneous polynomials")
    ctx = _context_for(polys)
    ech = IntEchelon()
    for f in polys:
        for row in flatten_family(f, ctx):
            ech.insert(row)
    phi = euler_phi(polys[0].m)
    if ech.rank % phi:
        raise AssertionError("flattened rank not divisible by phi(m)")
    return ech.rank // phi


def ideal_dim_in_degree(gens, k):
    """Dimension in degree k of the ideal generated by homogeneous gens:
    the rank of {monomial * g} over all monomials of degree k - deg(g)."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return 0
    products = []
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError("ideal generators must be homogeneous")
        dg = g.degree()
        if dg > k:
            continue
        for e in monomials_of_degree(g.n, k - dg):
            products.append(g.shift(e))
    if not products:
        return 0
    return span_rank(products)


class GradedSubspace:
    """A subspace of one graded piece with its canonical echelonized basis.

    The stored basis consists of the monic reduced polynomials read off the
    finalized flattened echelon: one basis element per pivot monomial, with
    leading coefficient 1 and tail supported on non-pivot monomials.
    """

    def __init__(self, degree, basis):
        self.degree = degree
        self.basis = list(basis)

    @classmethod
    def from_spanning(cls, polys, degree=None):
        polys = [f for f in polys if not f.is_zero()]
        if not polys:
            return cls(degree if degree is not None else 0, [])
        if not all(f.is_homogeneous() for f in polys):
            raise ValueError("spanning set must be homogeneous")
        ctx = _context_for(polys)
        if degree is not None and ctx.degree != degree:
            raise ValueError(f"degree mismatch: {ctx.degree} vs {degree}")
        ech = IntEchelon()
        for f in polys:
            for row in flatten_family(f, ctx):
                ech.insert(row)
        ech.finalize()
        return cls(ctx.degree, canonical_basis(ech, ctx))

    @property
    def dim(self):
        return len(self.basis)


def canonical_basis(ech, ctx):
    """Monic Q(zeta)-basis from a finalized flattened echelon: for each pivot
    monomial take the row pivoted at its coordinate-0 column and divide by
    the pivot entry."""
    basis = []
    phi = ctx.width
    for lead in sorted(ech.rows):
        if lead % phi:
            continue
        row = ech.rows[lead]
        f = row_to_poly(row, ctx)
        pivot_mono = ctx.monomials[lead // phi]
        basis.append(f * f.terms[pivot_mono].inverse())
    return basis
