import pytest

from cpcascade.cascade import build_cascade, cascade_hasse_edges, heisenberg_subset, phi, phi_inverse
from cpcascade.rootsys import build_root_system

from conftest import TYPES_8, dual_coxeter, golden, system

GOLDEN = golden("cascades.json")


def as_golden(c):
    return [
        {"beta": list(nd.beta), "parent": None if nd.parent is None else nd.parent + 1, "phi": sorted(a + 1 for a in nd.phi)}
        for nd in c
    ]


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_cascade_matches_published_lists(name):
    rs, c = system(name)
    assert as_golden(c) == GOLDEN[name]["nodes"]


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_underlined_roots(name):
    rs, _ = system(name)
    assert sorted(a + 1 for a in rs.commutative_simple) == GOLDEN[name]["pi_com"]


def test_strongly_orthogonal(any_type):
    rs, c = any_type
    for a in c.betas:
        for b in c.betas:
            if a != b:
                assert rs.form6(a, b) == 0
                assert not rs.is_root(tuple(x + y for x, y in zip(a, b)))
                assert not rs.is_root(tuple(x - y for x, y in zip(a, b)))


def test_heisenberg_subsets_partition_positive_roots(any_type):
    rs, c = any_type
    masks = c.heisenberg_masks
    total = 0
    for m in masks:
        assert total & m == 0
        total |= m
    assert total == rs.full_mask


def test_phi_partitions_simple_roots(any_type):
    rs, c = any_type
    seen = [a for nd in c for a in nd.phi]
    assert sorted(seen) == list(range(rs.rank))
    assert all(1 <= len(nd.phi) <= 2 for nd in c)


def test_phi_is_simple_part_of_heisenberg(any_type):
    rs, c = any_type
    for nd in c:
        assert nd.phi == {i for i in range(rs.rank) if rs.simple_root(i) in nd.heisenberg}


def test_heisenberg_shape(any_type):
    # H_beta \ {beta} splits into pairs {gamma, beta - gamma}
    rs, c = any_type
    for nd in c:
        h = set(nd.heisenberg)
        assert len(h) % 2 == 1 and nd.beta in h
        for g in h - {nd.beta}:
            assert tuple(b - x for b, x in zip(nd.beta, g)) in h


def test_theta_heisenberg_size(any_type):
    rs, c = any_type
    assert len(heisenberg_subset(c, 0)) == 2 * dual_coxeter(rs.type) - 3


@pytest.mark.parametrize("t", TYPES_8, ids=str)
def test_cascade_size_equals_rank_unless_a_dodd_e6(t):
    c = build_cascade(build_root_system(t))
    exceptional = t.family == "A" and t.rank > 1 or t.family == "D" and t.rank % 2 == 1 or str(t) == "E6"
    assert (len(c) == t.rank) == (not exceptional)


def test_parent_has_larger_support(any_type):
    rs, c = any_type
    for p, q in cascade_hasse_edges(c):
        assert c[q].support < c[p].support
        assert rs.leq(c[q].beta, c[p].beta)
        assert c.precedes(q, p) and not c.precedes(p, q)


def test_phi_inverse_roundtrip(any_type):
    rs, c = any_type
    for i in range(len(c)):
        for a in phi(c, i):
            assert phi_inverse(c, a) == i


def test_chain_and_upper_ideal():
    _, c = system("E7")
    assert c.chain(4) == [4, 3, 1, 0]
    assert c.is_upper_ideal({0, 1, 3})
    assert not c.is_upper_ideal({0, 3})
    assert c.minimal({0, 1, 2, 3}) == [2, 3]
    assert c.is_chain({0, 1, 2}) and not c.is_chain({0, 1, 2, 3})


@pytest.mark.parametrize("name, node, alpha", [("A5", 2, 2), ("F4", 3, 2), ("E7", 2, 0), ("E8", 3, 1)])
def test_some_cascade_elements_are_simple(name, node, alpha):
    rs, c = system(name)
    assert c[node].beta == rs.simple_root(alpha)


def test_even_a_has_no_simple_cascade_element():
    _, c = system("A6")
    assert all(sum(b) > 1 for b in c.betas)


def test_simple_cascade_elements_are_minimal(any_type):
    rs, c = any_type
    for nd in c:
        if sum(nd.beta) == 1:
            assert nd.phi == {nd.beta.index(1)}
            assert c.children(nd.id) == []
