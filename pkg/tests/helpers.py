"""Independent oracles used to freeze expected values.

Everything here deliberately avoids the code paths it is checking: ranks are
computed by naive Gaussian elimination over the cyclotomic field itself,
group enumeration is cross-checked by closure from generators, characters by
explicit eigenvalues in a larger cyclotomic field, and the polynomial action
by literal matrix application.
"""

from math import lcm

from cherednik_lab.cyclotomic import CycloNumber, zeta_pow
from cherednik_lab.groups import MonomialMatrix
from cherednik_lab.polynomials import Poly


def cyclo_rank(rows):
    """Rank of a matrix with CycloNumber entries by naive elimination."""
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    pivot_col = 0
    while pivot_col < cols and rank < len(rows):
        pivot_row = None
        for i in range(rank, len(rows)):
            if not rows[i][pivot_col].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            pivot_col += 1
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = rows[rank][pivot_col].inverse()
        rows[rank] = [c * inv for c in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not rows[i][pivot_col].is_zero():
                factor = rows[i][pivot_col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        pivot_col += 1
    return rank


def poly_matrix_rank(polys):
    """Rank of a family of polynomials via their dense coefficient matrix."""
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        return 0
    monomials = sorted({e for f in polys for e in f.terms})
    m = polys[0].m
    rows = [[f.coeff(e) for e in monomials] for f in polys]
    return cyclo_rank(rows)


def closure_from_generators(gens):
    """The subgroup generated by the given monomial matrices."""
    if not gens:
        return set()
    first = gens[0]
    ident = MonomialMatrix.identity(first.m, first.n)
    elements = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for w in frontier:
            for g in gens:
                prod = w * g
                if prod not in elements:
                    elements.add(prod)
                    new.append(prod)
        frontier = new
    return elements


def hstar_eigenvalues(w):
    """Eigenvalues of w on the dual space, as roots of unity in a larger
    cyclotomic field: a cycle of length c with exponent sum e contributes
    the c-th roots of zeta^(-e)."""
    cycles = w.cycles()
    big_l = lcm(*(len(c) for c, _ in cycles))
    big_m = w.m * big_l
    eigs = []
    for cyc, e in cycles:
        c = len(cyc)
        base = -e * (big_l // c)
        for k in range(c):
            eigs.append(zeta_pow(big_m, base + k * (big_m // c)))
    return big_m, eigs


def ext_power_char_oracle(w, i):
    """Trace on the i-th exterior power as a sum of i-fold eigenvalue
    products, computed in the larger field."""
    from itertools import combinations

    big_m, eigs = hstar_eigenvalues(w)
    total = CycloNumber.zero(big_m)
    for subset in combinations(eigs, i):
        prod = CycloNumber.one(big_m)
        for lam in subset:
            prod = prod * lam
        total = total + prod
    return big_m, total


def matrix_act_oracle(w, f):
    """Apply w to a polynomial by literally substituting the inverse
    transpose matrix into each variable."""
    matrix = w.matrix_on_hstar()
    n, m = f.n, f.m
    images = []
    for j in range(n):
        g = Poly.zero(m, n)
        for i in range(n):
            if not matrix[i][j].is_zero():
                g = g + Poly.variable(m, n, i + 1) * matrix[i][j]
        images.append(g)
    out = Poly.zero(m, n)
    for e, c in f.terms.items():
        term = Poly.constant(m, n, 1) * c
        for j, k in enumerate(e):
            for _ in range(k):
                term = term * images[j]
        out = out + term
    return out


def det_matrix_oracle(w):
    """Determinant of the explicit matrix of w on the reflection space, by
    permutation expansion."""
    from itertools import permutations

    rows = w.matrix_on_h()
    n = w.n
    total = CycloNumber.zero(w.m)
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        prod = CycloNumber.one(w.m)
        for i in range(n):
            prod = prod * rows[i][perm[i]]
        total = total + prod * sign
    return total


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def identity_minus_rank(w):
    """rank(1 - w) on the reflection space via naive cyclotomic elimination."""
    rows = w.matrix_on_h()
    n = w.n
    one = CycloNumber.one(w.m)
    mat = [
        [(one if i == j else CycloNumber.zero(w.m)) - rows[i][j] for j in range(n)]
        for i in range(n)
    ]
    return cyclo_rank(mat)
