import pytest
from hypothesis import given, settings, strategies as st

import bruteforce as bf
import pools
from sylowrank.constructions import TwistParams, base_subgroup, build_S, wreath_z2
from sylowrank.errors import CapExceeded, PreconditionFailed
from sylowrank.groups import center, direct_product, is_normal
from sylowrank.presentations import (
    action_omega_even,
    action_sl_su_I,
    cyclic,
    dihedral,
    elementary_abelian,
    quaternion,
    semidihedral,
)
from sylowrank.rank import (
    InvolutionGraph,
    all_maximal_elem_abelian,
    count_fixed_point_free,
    count_order_p,
    count_order_p_in_coset,
    coset_elements_conjugate,
    involutions,
    normal_rank,
    rank,
    rank_report,
    v_sequence,
    wreath_count_formula,
)
from sylowrank.groups import trivial_group

SMALL = sorted((name for name, _ in pools.all_builders(1 << 10)
                if name in {"Z8", "E8", "D16", "Q16", "SD16", "SD32", "D8oD8", "D8wrZ2",
                            "Q8wrZ2", "TR[sl_su_II,2]", "TR[omega_even,2]", "Z4xZ2",
                            "w1[omega_odd,2,full]", "sl 4 3", "sp 4 3", "gl 3 3"}))


def test_involutions_examples():
    assert len(involutions(quaternion(2))) == 1
    assert len(involutions(dihedral(3))) == 5
    assert involutions(trivial_group()) == []


@pytest.mark.parametrize("k", [0, 1, 3, 5])
def test_elementary_abelian_ranks(k):
    E = elementary_abelian(k)
    dim, basis = rank(E)
    assert dim == k and len(basis) == k
    assert normal_rank(E)[0] == k


def test_rank_of_twisted_examples():
    S = build_S(TwistParams.from_action(action_sl_su_I(2)), 2)
    rep = rank_report(S)
    assert (rep.rank, rep.normal_rank) == (3, 2)
    S = build_S(TwistParams.from_action(action_omega_even(2)), 1)
    assert rank_report(S).rank == 3


def test_normal_rank_dihedral16():
    assert normal_rank(dihedral(4))[0] == 1


def test_known_small_ranks():
    expect = {"Q8": (1, 1), "D8": (2, 2), "SD16": (2, 1), "D8oD8": (3, 3)}
    for name, want in expect.items():
        G = pools.build(name)
        rep = rank_report(G)
        assert (rep.rank, rep.normal_rank) == want, name


def test_witnesses_are_valid():
    for name in SMALL:
        G = pools.build(name)
        rep = rank_report(G)
        E = G.subgroup(rep.rank_witness)
        assert E.is_elementary_abelian() and E.order == 1 << rep.rank
        N = G.subgroup(rep.normal_witness)
        assert N.is_elementary_abelian() and N.order == 1 << rep.normal_rank
        assert is_normal(N, G)


@pytest.mark.parametrize("name", SMALL)
def test_matches_brute_force(name):
    G = pools.build(name)
    rep = rank_report(G)
    assert (rep.rank, rep.normal_rank) == bf.ranks(G)


def test_all_maximal_examples():
    D8 = dihedral(3)
    maxes = all_maximal_elem_abelian(D8)
    assert [H.order for H in maxes] == [4, 4]
    Q = all_maximal_elem_abelian(quaternion(2))
    assert len(Q) == 1 and set(Q[0].elements) == set(center(quaternion(2)).elements)
    E = all_maximal_elem_abelian(elementary_abelian(3))
    assert len(E) == 1 and E[0].order == 8


@pytest.mark.parametrize("name", ["D8wrZ2", "SD16", "TR[omega_even,2]", "sl 4 3"])
def test_all_maximal_against_brute_force(name):
    G = pools.build(name)
    ours = {frozenset(H.elements) for H in all_maximal_elem_abelian(G)}
    assert ours == set(bf.maximal_elementary_abelian(G))


def test_all_maximal_strict_cap():
    with pytest.raises(CapExceeded):
        all_maximal_elem_abelian(dihedral(4), cap=8)


def test_counting_examples():
    for Q, want in ((cyclic(4), 7), (cyclic(2), 5)):
        assert count_order_p(wreath_z2(Q), 2) == want == wreath_count_formula(
            count_order_p(Q, 2), Q.order, 2)
    W = wreath_z2(quaternion(2))
    swap = next(x for x in W.gens if x[0] != W.identity[0])
    P = base_subgroup(W)
    assert count_order_p_in_coset(P, swap, 2) == 8
    assert coset_elements_conjugate(P, swap, 2)


def test_coset_precondition():
    W = wreath_z2(quaternion(2))
    with pytest.raises(PreconditionFailed):
        count_order_p_in_coset(W, W.identity, 2)
    P = base_subgroup(W)
    with pytest.raises(PreconditionFailed):
        count_order_p_in_coset(P, P.gens[0], 2)


def test_v_sequence_examples():
    assert count_fixed_point_free(1) == 1
    assert count_fixed_point_free(2) == 3
    assert v_sequence(2, 1) == ([1], [True])
    values, checks = v_sequence(2, 3)
    assert values == [1, 3, 17] and all(checks)


def test_stats_present():
    rep = rank_report(dihedral(4))
    assert rep.stats["involutions"] == 9
    assert rep.stats["rank_nodes"] > 0
    d = rep.to_dict(dihedral(4), timings=False)
    assert "millis" not in d["stats"] and d["rank"] == 2


def test_graph_is_commuting_graph():
    G = semidihedral(3)
    g = InvolutionGraph(G)
    for i, x in enumerate(g.vertices):
        for j, y in enumerate(g.vertices):
            if i != j:
                assert bool(g.adj[i] >> j & 1) == G.commute(x, y)


_HYP_POOL = [n for n, _ in pools.all_builders(1 << 10)
             if n in {"Z4", "E4", "D8", "Q8", "D16", "Q16", "SD16", "D8oD8", "Z4xZ2",
                      "TR[sl_su_I,2]", "TR[omega_odd,2]", "Q8wrZ2"}]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(_HYP_POOL), st.sampled_from(_HYP_POOL))
def test_product_additivity(a, b):
    A, B = pools.build(a), pools.build(b)
    ra, rb = rank_report(A), rank_report(B)
    rab = rank_report(direct_product(A, B))
    assert rab.rank == ra.rank + rb.rank
    assert rab.normal_rank == ra.normal_rank + rb.normal_rank


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(_HYP_POOL))
def test_rank_inequalities(name):
    G = pools.build(name)
    rep = rank_report(G)
    assert 0 <= rep.normal_rank <= rep.rank <= G.order.bit_length() - 1
    if rep.normal_rank:
        # a nontrivial normal subgroup of a 2-group meets the centre
        Z = set(center(G).elements)
        N = G.subgroup(rep.normal_witness)
        assert any(x in Z for x in N.elements if x != G.identity)
