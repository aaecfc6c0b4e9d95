import pytest

from cherednik_lab.groups import GroupParams
from cherednik_lab.multipartitions import (
    KleshchevClassifier,
    Node,
    ResidueSym,
    addable_nodes,
    hecke_simple_count,
    multipartitions,
    non_kleshchev_list,
    orbit_representatives,
    orbit_size,
    partitions,
    removable_nodes,
    residue,
    rho_multipartition,
    varpi_apply,
)
from cherednik_lab.groups import conjugacy_classes, irrep_count

TRIPLES = [(3, 1, 2), (9, 3, 2), (4, 2, 3), (4, 2, 2)]


def test_partitions_basic():
    assert partitions(0) == ((),)
    assert set(partitions(4)) == {(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}


def test_multipartitions_count():
    # 9 = 2 partitions of 2 in each of 3 components + 3 ways to split 1+1
    assert len(multipartitions(3, 2)) == 9
    for mp in multipartitions(4, 3):
        assert len(mp) == 4
        assert sum(sum(part) for part in mp) == 3


def test_multipartition_cap():
    with pytest.raises(ValueError):
        multipartitions(9, 2, cap=10)


def test_varpi_identity_when_p_is_one():
    g = GroupParams(3, 1, 2)
    for mp in multipartitions(3, 2):
        assert varpi_apply(mp, g) == mp


def test_varpi_moves_rho():
    g = GroupParams(4, 2, 2)
    assert varpi_apply(rho_multipartition(1, g), g) == rho_multipartition(2, g)


def test_varpi_order_divides_p():
    for m, p, n in TRIPLES:
        g = GroupParams(m, p, n)
        for mp in multipartitions(m, n):
            cur = mp
            for _ in range(p):
                cur = varpi_apply(cur, g)
            assert cur == mp
            assert p % orbit_size(mp, g) == 0


def test_orbit_size_examples():
    g312 = GroupParams(3, 1, 2)
    assert orbit_size(rho_multipartition(1, g312), g312) == 1
    g422 = GroupParams(4, 2, 2)
    assert orbit_size(rho_multipartition(1, g422), g422) == 2
    # a multipartition with all components equal is fixed by the rotation
    g424 = GroupParams(4, 2, 4)
    assert orbit_size(((1,), (1,), (1,), (1,)), g424) == 1


def test_residue_examples():
    g = GroupParams(4, 2, 3)
    # Q_1 = 1
    assert residue(Node(1, 1, 1), g, "main") == ResidueSym(1, 0, 0)
    # block-2 symbol folds to q^(n-1) under the main relation
    assert residue(Node(g.p + 1, 1, 1), g, "main") == ResidueSym(1, g.n - 1, 0)
    assert residue(Node(g.p + 1, 1, 1), g, "none") == ResidueSym(2, 0, 0)
    # direct substitution: component 2 = eta * block 1, q-exponent col - row
    assert residue(Node(2, 2, 1), g, "main") == ResidueSym(1, -1, 1)


def test_addable_removable_examples():
    g = GroupParams(4, 2, 3)
    empty = ((),) * 4
    adds = addable_nodes(empty, g)
    assert adds == [Node(k, 1, 1) for k in range(1, 5)]
    single_row = ((3,), (), (), ())
    assert removable_nodes(single_row, g) == [Node(1, 1, 3)]
    rho1 = rho_multipartition(1, g)
    res = residue(removable_nodes(rho1, g)[0], g, "main")
    assert res == ResidueSym(1, g.n - 1, 0)


def test_empty_is_kleshchev():
    g = GroupParams(4, 2, 3)
    assert KleshchevClassifier(g).is_kleshchev(((),) * 4)


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_rho_not_kleshchev(m, p, n):
    g = GroupParams(m, p, n)
    classifier = KleshchevClassifier(g)
    for i in range(1, p + 1):
        assert not classifier.is_kleshchev(rho_multipartition(i, g))


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_non_kleshchev_list_is_rho_orbit(m, p, n):
    g = GroupParams(m, p, n)
    expected = sorted(rho_multipartition(i, g) for i in range(1, p + 1))
    assert non_kleshchev_list(g, "main") == expected


def test_high_component_multipartitions_are_kleshchev():
    # support concentrated in a single component beyond the first two blocks
    g = GroupParams(9, 3, 2)
    classifier = KleshchevClassifier(g)
    for k in range(2 * g.p + 1, g.m + 1):
        for lam in partitions(2):
            mp = [()] * g.m
            mp[k - 1] = lam
            assert classifier.is_kleshchev(tuple(mp))


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_kleshchev_invariant_under_rotation(m, p, n):
    g = GroupParams(m, p, n)
    classifier = KleshchevClassifier(g)
    for mp in multipartitions(m, n):
        assert classifier.is_kleshchev(mp) == classifier.is_kleshchev(varpi_apply(mp, g))


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_peeling_good_node_preserves_kleshchev(m, p, n):
    g = GroupParams(m, p, n)
    classifier = KleshchevClassifier(g)
    for mp in multipartitions(m, n):
        if not classifier.is_kleshchev(mp) or mp == ((),) * m:
            continue
        goods = classifier.good_nodes(mp)
        assert goods
        # at least one good node peels down to a Kleshchev multipartition,
        # and every peel that stays Kleshchev is consistent with the recursion
        from cherednik_lab.multipartitions import _remove_node

        assert any(classifier.is_kleshchev(_remove_node(mp, y)) for y in goods)


@pytest.mark.parametrize("m,p,n", TRIPLES)
def test_hecke_count_equals_irreps_minus_one(m, p, n):
    g = GroupParams(m, p, n)
    count = hecke_simple_count(g)
    assert count == irrep_count(g) - 1
    assert count == len(conjugacy_classes(g)) - 1


def test_hecke_count_g312():
    assert hecke_simple_count(GroupParams(3, 1, 2)) == 8


def test_orbit_representatives_cover():
    g = GroupParams(4, 2, 2)
    reps = orbit_representatives(g)
    total = sum(g.p // orbit_size(mp, g) for mp in reps)
    assert total == irrep_count(g)
    # representatives are lexicographically least in their orbits
    for mp in reps:
        assert mp <= varpi_apply(mp, g)
