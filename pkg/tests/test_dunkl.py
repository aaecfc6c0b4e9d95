import random
from fractions import Fraction

import pytest

from cherednik_lab.cyclotomic import CycloNumber, zeta_pow
from cherednik_lab.dunkl import (
    CherednikParams,
    commutator_check,
    dunkl_apply,
    euler_eigenvalue,
    grading_shift,
    parameter_embed,
    sample_cherednik_params,
    z_element,
    z_scalar,
)
from cherednik_lab.groups import GroupParams, enumerate_group
from cherednik_lab.polynomials import Poly, act, monomials_of_degree

TRIPLES = [(3, 1, 2), (9, 3, 2), (4, 2, 3), (4, 2, 2)]


def random_poly(g, rng, deg, density=0.4):
    f = Poly.zero(g.m, g.n)
    for k in range(deg + 1):
        for e in monomials_of_degree(g.n, k):
            if rng.random() < density:
                c = rng.randint(-9, 9)
                if c:
                    f = f + Poly.monomial(g.m, g.n, e, c)
    return f


@pytest.mark.parametrize("m,p,n", TRIPLES)
@pytest.mark.parametrize("relation", ["unit", "main", "none"])
def test_sampled_params_satisfy_relation(m, p, n, relation):
    g = GroupParams(m, p, n)
    for seed in (0, 1, 2):
        cp = sample_cherednik_params(g, relation, seed)
        assert cp.check_relation(g)
        assert len(cp.kappa) == g.d - 1
        assert cp.kappa00_odd == cp.kappa00_even == cp.kappa00


def test_sampling_is_deterministic():
    g = GroupParams(4, 2, 3)
    assert sample_cherednik_params(g, "main", 5) == sample_cherednik_params(g, "main", 5)
    assert sample_cherednik_params(g, "main", 5) != sample_cherednik_params(g, "main", 6)


def test_relation_validation():
    g = GroupParams(4, 2, 3)
    cp = CherednikParams(Fraction(1, 2), (Fraction(1),), "none")
    assert cp.check_relation(g)
    bad = CherednikParams(Fraction(1, 2), (Fraction(1),), "unit")
    assert not bad.check_relation(g)


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_dunkl_kills_constants(m, p, n):
    g = GroupParams(m, p, n)
    cp = sample_cherednik_params(g, "main", 0)
    one = Poly.constant(m, n, 1)
    for a in range(1, n + 1):
        assert dunkl_apply(g, cp, a, one).is_zero()


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_dunkl_off_diagonal_variables(m, p, n):
    # T_a x_b = 0 for a != b: the twist sum over all hyperplanes vanishes
    g = GroupParams(m, p, n)
    cp = sample_cherednik_params(g, "none", 1)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a != b:
                assert dunkl_apply(g, cp, a, Poly.variable(m, n, b)).is_zero()


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_dunkl_diagonal_scalar(m, p, n):
    g = GroupParams(m, p, n)
    for relation, seed in (("unit", 0), ("main", 1), ("none", 2)):
        cp = sample_cherednik_params(g, relation, seed)
        expected = 1 + g.d * cp.kappa_at(1) + m * (n - 1) * cp.kappa00
        for a in range(1, n + 1):
            got = dunkl_apply(g, cp, a, Poly.variable(m, n, a))
            assert got == Poly.constant(m, n, expected)
            if relation == "unit":
                assert got.is_zero()


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_dunkl_lowers_degree_exactly(m, p, n):
    g = GroupParams(m, p, n)
    cp = sample_cherednik_params(g, "main", 3)
    rng = random.Random(5)
    for k in (1, 3, 5):
        f = Poly.zero(m, n)
        for e in monomials_of_degree(n, k):
            if rng.random() < 0.6:
                f = f + Poly.monomial(m, n, e, rng.randint(1, 5))
        for a in range(1, n + 1):
            image = dunkl_apply(g, cp, a, f)
            if not image.is_zero():
                assert image.is_homogeneous() and image.degree() == k - 1


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_collapsed_route_matches_division_route(m, p, n):
    g = GroupParams(m, p, n)
    cp = sample_cherednik_params(g, "main", 7)
    rng = random.Random(7)
    for _ in range(5):
        f = random_poly(g, rng, 5, density=0.3)
        for a in range(1, n + 1):
            assert dunkl_apply(g, cp, a, f, "division") == dunkl_apply(g, cp, a, f, "collapsed")


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_dunkl_operators_commute(m, p, n):
    g = GroupParams(m, p, n)
    cp = sample_cherednik_params(g, "main", 11)
    rng = random.Random(11)
    for _ in range(4):
        f = random_poly(g, rng, 5, density=0.3)
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                assert dunkl_apply(g, cp, a, dunkl_apply(g, cp, b, f, "collapsed"), "collapsed") == dunkl_apply(
                    g, cp, b, dunkl_apply(g, cp, a, f, "collapsed"), "collapsed"
                )


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_commutation_relation_on_random_polys(m, p, n):
    g = GroupParams(m, p, n)
    cp = sample_cherednik_params(g, "main", 13)
    rng = random.Random(13)
    for _ in range(3):
        f = random_poly(g, rng, 4, density=0.3)
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                assert commutator_check(g, cp, a, b, f)


def test_zero_parameters_reduce_to_partial_derivatives():
    g = GroupParams(4, 2, 3)
    cp = CherednikParams(Fraction(0), (Fraction(0),), "none")
    rng = random.Random(2)
    f = random_poly(g, rng, 4)
    for a in range(1, 4):
        assert dunkl_apply(g, cp, a, f) == f.derivative(a)
        xb = Poly.variable(4, 3, 2)
        lhs = dunkl_apply(g, cp, a, xb * f) - xb * dunkl_apply(g, cp, a, f)
        assert lhs == (f if a == 2 else Poly.zero(4, 3))


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_dunkl_equivariance(m, p, n):
    # w T_a w^(-1) = zeta^(exps_a) T_(perm(a)) as operators
    g = GroupParams(m, p, n)
    cp = sample_cherednik_params(g, "main", 17)
    rng = random.Random(17)
    elements = enumerate_group(g)
    for _ in range(8):
        w = rng.choice(elements)
        f = random_poly(g, rng, 3, density=0.4)
        for a in range(1, n + 1):
            lhs = act(w, dunkl_apply(g, cp, a, act(w.inverse(), f), "collapsed"))
            rhs = dunkl_apply(g, cp, w.perm[a - 1] + 1, f, "collapsed").scale(
                zeta_pow(m, w.exps[a - 1])
            )
            assert lhs == rhs


def test_parameter_embed_zero():
    g = GroupParams(4, 2, 3)
    cp = CherednikParams(Fraction(0), (Fraction(0),), "none")
    ambient, mu = parameter_embed(g, cp)
    assert ambient.m == 4 and ambient.p == 1 and ambient.n == 3
    assert mu.kappa00 == 0 and all(k == 0 for k in mu.kappa)


def test_parameter_embed_periodic_pattern():
    g = GroupParams(4, 2, 3)
    cp = CherednikParams(Fraction(1, 3), (Fraction(-3, 2),), "none")
    _, mu = parameter_embed(g, cp)
    # mu = (mu_1, mu_2, mu_3) = (kappa_1/p, 0, kappa_1/p)
    assert mu.kappa == (Fraction(-3, 4), Fraction(0), Fraction(-3, 4))
    assert mu.kappa00 == Fraction(1, 3)


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_parameter_embed_main_relation_transfer(m, p, n):
    g = GroupParams(m, p, n)
    cp = sample_cherednik_params(g, "main", 19)
    _, mu = parameter_embed(g, cp)
    target = Fraction(-1 - m * (n - 1) - g.d)
    assert m * mu.kappa_at(1) + m * (n - 1) * mu.kappa00 == target


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_embedded_dunkl_agrees(m, p, n):
    g = GroupParams(m, p, n)
    cp = sample_cherednik_params(g, "main", 23)
    ambient, mu = parameter_embed(g, cp)
    rng = random.Random(23)
    for _ in range(4):
        f = random_poly(g, rng, 5, density=0.3)
        for a in range(1, n + 1):
            assert dunkl_apply(g, cp, a, f, "collapsed") == dunkl_apply(ambient, mu, a, f, "collapsed")


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_z_scalar_closed_form_and_trace(m, p, n):
    g = GroupParams(m, p, n)
    for relation, seed in (("unit", 0), ("main", 1)):
        cp = sample_cherednik_params(g, relation, seed)
        values = [z_scalar(g, cp, i) for i in range(n + 1)]
        assert values[0] == 0
        if relation == "unit":
            assert values[1] == -1
        if relation == "main":
            assert values[n] == -n * (m * (n - 1) + g.d + 1)


def test_z_element_is_central():
    g = GroupParams(4, 2, 2)
    cp = sample_cherednik_params(g, "main", 4)
    z = z_element(g, cp)
    for w in enumerate_group(g):
        conjugated = {w * u * w.inverse(): c for u, c in z.terms.items()}
        assert conjugated == z.terms


def test_euler_eigenvalues():
    g = GroupParams(4, 2, 3)
    cp = sample_cherednik_params(g, "main", 0)
    # the vacuum degree has eigenvalue 0 on the trivial representation
    assert euler_eigenvalue(g, cp, 0, 0) == 0
    # lowest shifted eigenvalue on the i-th exterior standard module
    r = g.r
    for i in range(g.n + 1):
        assert euler_eigenvalue(g, cp, 0, i, shifted=True) == i * r - grading_shift(g)
    # the distinguished degree n + m*C(n,2) is shifted to zero on the trivial type
    assert euler_eigenvalue(g, cp, grading_shift(g), 0, shifted=True) == 0
