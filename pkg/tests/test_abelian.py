from itertools import combinations

import pytest

from cpcascade.abelian import (
    RankCapExceeded,
    UpperIdeal,
    enumerate_abelian_ideals,
    heisenberg_cp_ideals,
    is_abelian_ideal,
    max_abelian_dim_in,
    maximal_abelian_ideals,
    principal_upper_ideal,
)
from cpcascade.parabolic import all_nilradicals, heisenberg_nilradical, nilradical_from_T
from cpcascade.rootsys import all_types, build_root_system

from conftest import TYPES_8, dual_coxeter, system


def naive_abelian_ideals(rs):
    """Every subset of Delta+ that is upward closed and abelian (tiny ranks only)."""
    pos = rs.positive_roots
    out = []
    for k in range(len(pos) + 1):
        for sub in combinations(pos, k):
            s = set(sub)
            if any(rs.leq(a, b) and b not in s for a in s for b in pos):
                continue
            if any(rs.is_root(tuple(x + y for x, y in zip(a, b))) for a in s for b in s):
                continue
            out.append(rs.mask(s))
    return sorted(out)


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "G2"])
def test_enumeration_matches_naive_scan(name):
    rs = build_root_system(name)
    assert sorted(a.members for a in enumerate_abelian_ideals(rs)) == naive_abelian_ideals(rs)


@pytest.mark.parametrize("name, count", [("A1", 2), ("A2", 4), ("D4", 16)])
def test_small_counts(name, count):
    assert len(enumerate_abelian_ideals(build_root_system(name))) == count


@pytest.mark.parametrize("t", TYPES_8, ids=str)
def test_peterson_count(t):
    assert len(enumerate_abelian_ideals(build_root_system(t))) == 2**t.rank


@pytest.mark.parametrize("t", TYPES_8, ids=str)
def test_maximal_count_equals_long_simple(t):
    rs = build_root_system(t)
    assert len(maximal_abelian_ideals(rs)) == len(rs.long_simple)


def test_enumeration_sorted_and_unique():
    rs = build_root_system("D5")
    ideals = enumerate_abelian_ideals(rs)
    keys = [a.sort_key() for a in ideals]
    assert keys == sorted(set(keys))
    assert ideals[0].dim == 0


def test_rank_cap():
    rs = build_root_system("E8")
    with pytest.raises(RankCapExceeded):
        enumerate_abelian_ideals(rs, rank_cap=7)


def test_principal_ideals():
    rs = build_root_system("A2")
    assert principal_upper_ideal(rs, rs.theta).roots == [rs.theta]
    assert principal_upper_ideal(rs, (1, 0)).roots == [(1, 0), (1, 1)]
    assert not is_abelian_ideal(rs, UpperIdeal(rs, rs.full_mask))
    assert is_abelian_ideal(rs, principal_upper_ideal(rs, rs.theta))


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_d_alpha1_ideal(n):
    rs = build_root_system(f"D{n}")
    ideal = principal_upper_ideal(rs, rs.simple_root(0))
    assert ideal.dim == 2 * n - 2
    assert is_abelian_ideal(rs, ideal)
    assert ideal.members in {a.members for a in maximal_abelian_ideals(rs)}


@pytest.mark.parametrize("n", range(1, 8))
def test_type_a_maximal_are_single_root_nilradicals(n):
    rs, c = system(f"A{n}")
    expected = {nilradical_from_T(rs, c, {k}).mask for k in range(n)}
    assert {a.members for a in maximal_abelian_ideals(rs)} == expected


def test_abelian_ideals_are_commutative(any_type):
    rs, _ = any_type
    for a in enumerate_abelian_ideals(rs):
        assert a.members & ~rs.commutative_mask == 0
        assert a.is_upper()


def test_principal_ideal_of_commutative_root_is_abelian(any_type):
    rs, _ = any_type
    for g in rs.positive_roots:
        assert is_abelian_ideal(rs, principal_upper_ideal(rs, g)) == rs.is_commutative(g)


def test_heisenberg_cp_ideals(any_type):
    rs, c = any_type
    ideals = heisenberg_cp_ideals(rs, c)
    h = heisenberg_nilradical(rs, c)
    assert len(ideals) == len(rs.long_simple)
    for a in ideals:
        assert a.dim == dual_coxeter(rs.type) - 1 == h.b
        assert a.members & ~h.mask == 0
        assert is_abelian_ideal(rs, a) and a.is_upper()


@pytest.mark.parametrize("n", range(2, 8))
def test_type_a_heisenberg_cp_ideals(n):
    rs, c = system(f"A{n}")
    h = heisenberg_nilradical(rs, c).mask
    expected = {h & nilradical_from_T(rs, c, {k}).mask for k in range(n)}
    assert {a.members for a in heisenberg_cp_ideals(rs, c)} == expected


def test_max_abelian_dim_examples():
    rs, c = system("E6")
    assert max_abelian_dim_in(rs, nilradical_from_T(rs, c, {1})) == 15
    for t in all_types(8):
        rs, c = system(str(t))
        assert max_abelian_dim_in(rs, heisenberg_nilradical(rs, c)) == dual_coxeter(t) - 1


def test_generators_form_antichain():
    rs = build_root_system("B4")
    for a in enumerate_abelian_ideals(rs):
        gens = a.generators()
        for x in gens:
            for y in gens:
                assert x == y or not rs.leq(x, y)
        closure = 0
        for g in gens:
            closure |= rs.up_masks[rs.index[g]]
        assert closure == a.members


@pytest.mark.parametrize("t", all_types(5), ids=str)
def test_abelian_dimension_bound(t):
    # any abelian upper ideal inside n has dim <= b(n)
    rs, c = system(str(t))
    ideals = enumerate_abelian_ideals(rs)
    for n in all_nilradicals(rs, c):
        assert max(((a.members & n.mask).bit_count() for a in ideals), default=0) <= n.b
