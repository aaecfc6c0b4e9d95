import random
from math import comb

import pytest

from cherednik_lab.cyclotomic import CycloNumber, zeta_pow
from cherednik_lab.groups import (
    GroupParams,
    MonomialMatrix,
    SizeCapError,
    conjugacy_classes,
    det_char,
    enumerate_group,
    ext_power_char,
    group_generators,
    irrep_count,
    reflection_classes,
    reflections,
    s_reflection,
    sigma_reflection,
)

from helpers import (
    closure_from_generators,
    det_matrix_oracle,
    ext_power_char_oracle,
    identity_minus_rank,
)

TRIPLES = [(3, 1, 2), (9, 3, 2), (4, 2, 3), (4, 2, 2)]


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_group_order(m, p, n):
    g = GroupParams(m, p, n)
    elements = enumerate_group(g)
    assert len(elements) == g.order
    assert len(set(elements)) == len(elements)


@pytest.mark.parametrize(
    "m,p,n,order", [(3, 1, 2, 18), (4, 2, 3, 192), (4, 2, 2, 16), (9, 3, 2, 54)]
)
def test_group_order_matches_closure(m, p, n, order):
    g = GroupParams(m, p, n)
    assert len(enumerate_group(g)) == order
    closure = closure_from_generators(group_generators(g))
    assert len(closure) == order
    assert closure == set(enumerate_group(g))


def test_parameter_validation():
    with pytest.raises(ValueError):
        GroupParams(4, 4, 3)  # m = p rejected
    with pytest.raises(ValueError):
        GroupParams(4, 3, 2)  # p must divide m
    with pytest.raises(ValueError):
        GroupParams(4, 2, 1)  # n >= 2
    assert GroupParams(4, 2, 2).appendix_regime
    assert not GroupParams(9, 3, 2).appendix_regime
    assert not GroupParams(4, 2, 3).appendix_regime


def test_size_cap():
    g = GroupParams(6, 1, 5)
    with pytest.raises(SizeCapError):
        enumerate_group(g, cap=1000)


@pytest.mark.parametrize(
    "m,p,n,count", [(4, 2, 3, 15), (3, 1, 2, 7), (4, 2, 2, 6), (9, 3, 2, 13)]
)
def test_reflection_counts(m, p, n, count):
    g = GroupParams(m, p, n)
    refl = reflections(g)
    assert len(refl) == count == g.reflection_count()
    # every reflection fixes a hyperplane: rank(1 - w) = 1 on the explicit matrix
    for w in refl:
        assert identity_minus_rank(w) == 1


@pytest.mark.parametrize(
    "m,p,n,count", [(4, 2, 3, 2), (4, 2, 2, 3), (3, 1, 2, 3), (9, 3, 2, 3)]
)
def test_reflection_class_counts(m, p, n, count):
    g = GroupParams(m, p, n)
    assert len(reflection_classes(g)) == count == g.reflection_class_count()


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_fixed_space_dim_matches_rank_oracle(m, p, n):
    g = GroupParams(m, p, n)
    for w in enumerate_group(g):
        assert w.fixed_space_dim() == g.n - identity_minus_rank(w)


def test_fixed_space_examples():
    g = GroupParams(4, 2, 3)
    assert MonomialMatrix.identity(4, 3).fixed_space_dim() == 3
    assert (s_reflection(g, 1) ** 1).fixed_space_dim() == 2  # scales coordinate 1 by -1
    assert sigma_reflection(g, 1, 2, 0).fixed_space_dim() == 2


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_group_axioms_random(m, p, n):
    g = GroupParams(m, p, n)
    elements = enumerate_group(g)
    rng = random.Random(99)
    ident = MonomialMatrix.identity(m, n)
    for _ in range(500):
        a, b, c = (rng.choice(elements) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert (a * b).is_in(g)
        assert a * a.inverse() == ident


def test_ext_power_char_identity():
    g = GroupParams(4, 2, 3)
    ident = MonomialMatrix.identity(4, 3)
    for i in range(4):
        assert ext_power_char(ident, i) == CycloNumber.from_rational(4, comb(3, i))


def test_ext_power_char_s1p_example():
    # s_1^p on the dual space has eigenvalues zeta^(-2) = -1, 1, 1:
    # the trace on the dual space is -1 + 2 = 1
    g = GroupParams(4, 2, 3)
    w = s_reflection(g, 1)
    assert ext_power_char(w, 1) == CycloNumber.from_rational(4, 1)


def test_det_char_transposition():
    g = GroupParams(4, 2, 3)
    assert det_char(sigma_reflection(g, 1, 2, 0)) == CycloNumber.from_rational(4, -1)


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_ext_power_char_against_eigenvalue_oracle(m, p, n):
    g = GroupParams(m, p, n)
    rng = random.Random(5)
    elements = enumerate_group(g)
    sample = [rng.choice(elements) for _ in range(25)] + [MonomialMatrix.identity(m, n)]
    for w in sample:
        for i in range(n + 1):
            big_m, expected = ext_power_char_oracle(w, i)
            assert ext_power_char(w, i).lift(big_m) == expected


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_det_via_sign_and_exponents(m, p, n):
    g = GroupParams(m, p, n)
    for w in enumerate_group(g):
        assert w.det_h() == det_matrix_oracle(w)
        # determinant on the dual space is the inverse
        assert det_char(w) * w.det_h() == CycloNumber.one(m)


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_irrep_count_equals_class_count(m, p, n):
    g = GroupParams(m, p, n)
    assert irrep_count(g) == len(conjugacy_classes(g))


def test_irrep_count_g312():
    assert irrep_count(GroupParams(3, 1, 2)) == 9


def test_conjugacy_classes_partition_group():
    g = GroupParams(4, 2, 2)
    classes = conjugacy_classes(g)
    elements = enumerate_group(g)
    assert sum(len(c) for c in classes) == len(elements)
    assert {w for c in classes for w in c} == set(elements)


def test_membership_condition():
    g = GroupParams(4, 2, 3)
    w = MonomialMatrix(4, (0, 1, 2), (1, 1, 0))
    assert w.is_in(g)  # exponent sum 2 = 0 mod p
    assert not MonomialMatrix(4, (0, 1, 2), (1, 0, 0)).is_in(g)
