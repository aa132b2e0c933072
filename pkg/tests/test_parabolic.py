import pytest
from hypothesis import given, settings, strategies as st

from cpcascade.abelian import max_abelian_dim_in
from cpcascade.parabolic import (
    EmptyT,
    all_nilradicals,
    b_of,
    frobenius_envelope,
    heisenberg_nilradical,
    index_joseph,
    is_optimal,
    is_optimal_by_levi,
    nilradical_from_T,
    optimal_nilradicals,
    optimise,
)
from cpcascade.rootsys import all_types

from conftest import TYPES_8, dual_coxeter, golden, system

EX = golden("examples.json")


def T0(one_based):
    return {i - 1 for i in one_based}


def test_sl7_example():
    ex = EX["sl7_T26"]
    rs, c = system(ex["type"])
    n = nilradical_from_T(rs, c, T0(ex["T"]))
    assert (n.dim, n.index, n.b) == (ex["dim"], ex["index"], ex["b"])
    assert sorted(a + 1 for a in n.T_tilde) == ex["T_tilde"]
    assert sorted(i + 1 for i in n.cascade_ideal) == ex["K_of_n"]
    opt = optimise(n)
    assert opt.index == ex["optimised_index"] and opt.b == n.b
    assert not is_optimal(n) and is_optimal(opt)


def test_e6_example():
    ex = EX["e6_T2"]
    rs, c = system(ex["type"])
    n = nilradical_from_T(rs, c, T0(ex["T"]))
    assert (n.dim, n.index, n.b) == (ex["dim"], ex["index"], ex["b"])
    opt = optimise(n)
    assert sorted(a + 1 for a in opt.T) == ex["T_tilde"]
    assert (opt.dim, opt.index, opt.b) == (ex["optimised_dim"], ex["optimised_index"], ex["b"])
    assert max_abelian_dim_in(rs, n) == ex["max_abelian_dim"]
    assert n.cascade_ideal == {0, 1, 2}


def test_full_T_gives_derived_borel(any_type):
    rs, c = any_type
    u = nilradical_from_T(rs, c, range(rs.rank))
    assert u.dim == len(rs.positive_roots)
    assert is_optimal(u) and u.index == len(c)


@pytest.mark.parametrize("n", range(2, 9))
def test_type_a_single_root_is_abelian(n):
    rs, c = system(f"A{n}")
    for k in range(1, (n + 1) // 2 + 1):
        nil = nilradical_from_T(rs, c, {k - 1})
        assert nil.dim == nil.index == k * (n + 1 - k)
        assert nil.cascade_ideal == set(range(k))


def test_heisenberg_nilradical(any_type):
    rs, c = any_type
    h = heisenberg_nilradical(rs, c)
    hstar = dual_coxeter(rs.type)
    assert h.T == c.phi(0)
    assert h.mask == c.heisenberg_masks[0]
    assert (h.dim, h.index, h.b) == (2 * hstar - 3, 1, hstar - 1)
    assert frobenius_envelope(h).dim == 2 * hstar - 2


def test_type_a_heisenberg_T():
    rs, c = system("A7")
    assert heisenberg_nilradical(rs, c).T == {0, 6}


def test_empty_T_rejected():
    rs, c = system("A3")
    with pytest.raises(EmptyT):
        nilradical_from_T(rs, c, set())
    with pytest.raises(ValueError):
        nilradical_from_T(rs, c, {3})


def test_nilradical_invariants(any_type):
    rs, c = any_type
    for n in all_nilradicals(rs, c):
        assert all(rs.up_masks[k] & ~n.mask == 0 for k in range(len(rs.positive_roots)) if n.mask >> k & 1)
        assert c.is_upper_ideal(n.cascade_ideal)
        cover = 0
        for i in n.cascade_ideal:
            cover |= c.heisenberg_masks[i]
        assert n.mask & ~cover == 0
        assert (n.dim + n.index) % 2 == 0
        assert n.T == {i for i in range(rs.rank) if n.mask >> rs.index[rs.simple_root(i)] & 1}


def test_optimisation_properties(any_type):
    rs, c = any_type
    for n in all_nilradicals(rs, c):
        o = optimise(n)
        assert is_optimal(o)
        assert optimise(o) == o
        assert o.cascade_ideal == n.cascade_ideal
        assert o.contains(n)
        assert o.b == n.b == b_of(n)
        assert o.index == len(o.cascade_ideal)


def test_optimisation_is_largest_with_same_cascade_ideal():
    rs, c = system("D6")
    groups = {}
    for n in all_nilradicals(rs, c):
        groups.setdefault(n.cascade_ideal, []).append(n)
    for K, members in groups.items():
        big = max(members, key=lambda m: m.dim)
        assert all(big.contains(m) for m in members)
        assert optimise(members[0]) == big


def test_optimisation_monotone():
    rs, c = system("E6")
    nils = list(all_nilradicals(rs, c))
    for a in nils:
        for b in nils:
            if a.T <= b.T:
                assert a.cascade_ideal <= b.cascade_ideal
                assert optimise(b).contains(optimise(a))


def test_optimal_nilradicals_match_upper_ideals(any_type):
    rs, c = any_type
    opt = optimal_nilradicals(rs, c)
    assert {n.T for n in opt} == {n.T for n in all_nilradicals(rs, c) if is_optimal(n)}


@pytest.mark.parametrize("t", all_types(6), ids=str)
def test_optimality_via_levi_cascade(t):
    rs, c = system(str(t))
    for n in all_nilradicals(rs, c):
        assert is_optimal(n) == is_optimal_by_levi(rs, c, n.T)


def test_frobenius_envelope_dims(any_type):
    rs, c = any_type
    for n in list(all_nilradicals(rs, c))[:40]:
        f = frobenius_envelope(n)
        assert f.dim == n.dim + n.index
        assert f.nilradical_part == optimise(n)
        assert f.toral_rank == len(n.cascade_ideal)


def test_e6_envelope_of_borel():
    rs, c = system("E6")
    assert frobenius_envelope(nilradical_from_T(rs, c, range(6))).dim == 40


@pytest.mark.parametrize("m", [2, 3, 4])
def test_d_even_two_fork_ends(m):
    # T = Pi minus {alpha_1, alpha_3, ..., alpha_{2m-3}} in D_{2m}
    rs, c = system(f"D{2 * m}")
    T = set(range(2 * m)) - {2 * k for k in range(m - 1)}
    n = nilradical_from_T(rs, c, T)
    assert is_optimal(n)
    assert (n.dim, n.index, n.b) == (4 * m * m - 3 * m + 1, m + 1, 2 * m * m - m + 1)
    assert max_abelian_dim_in(rs, nilradical_from_T(rs, c, range(2 * m))) == 2 * m * m - m


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([str(t) for t in TYPES_8]), st.data())
def test_joseph_formula_shape(name, data):
    rs, c = system(name)
    T = data.draw(st.sets(st.integers(0, rs.rank - 1), min_size=1))
    n = nilradical_from_T(rs, c, T)
    assert index_joseph(n) == optimise(n).dim + len(n.cascade_ideal) - n.dim
    assert index_joseph(n) >= len(n.cascade_ideal)
