import pytest

import bruteforce as bf
from sylowrank.errors import BadParameter
from sylowrank.groups import direct_product, is_normal, semidirect_product
from sylowrank.presentations import (
    ACTIONS,
    BaseGroupSpec,
    action_omega_even,
    action_omega_odd,
    action_sl_su_I,
    action_sl_su_II,
    build_base,
    central_product_dihedral,
    dihedral,
    quaternion,
    semidihedral,
    split_tr,
)
from sylowrank.rank import involutions, rank_report


def _involution_count(G):
    return len(involutions(G))


@pytest.mark.parametrize("t", [2, 3, 4])
def test_quaternion_shape(t):
    Q = quaternion(t)
    assert Q.order == 2 ** (t + 1)
    v, w = Q.gens
    assert Q.element_order(v) == 2 ** t and Q.element_order(w) == 4
    assert _involution_count(Q) == 1


@pytest.mark.parametrize("t", [3, 4, 5])
def test_dihedral_involutions(t):
    D = dihedral(t)
    assert D.order == 2 ** t
    assert _involution_count(D) == 2 ** (t - 1) + 1


def test_dihedral_four_is_klein():
    assert dihedral(2).is_elementary_abelian()


def test_semidihedral_shape():
    SD = semidihedral(2)
    assert SD.order == 16 and _involution_count(SD) == 5


@pytest.mark.parametrize("t", [2, 3])
def test_central_product_order(t):
    assert central_product_dihedral(t).order == 2 ** (2 * t + 1)


def test_central_product_witness():
    G = central_product_dihedral(2)
    d, g, h, k = G.gens
    basis = [G.mul(d, g), G.mul(G.inv(d), g), G.mul(h, k)]
    E = G.subgroup(basis)
    assert E.order == 8 and E.is_elementary_abelian()
    assert rank_report(G).rank == 3


def test_build_base_and_parse():
    assert build_base(BaseGroupSpec.parse("q8,2")).order == 8
    assert build_base(BaseGroupSpec("dihedral", 3)).order == 8
    with pytest.raises(BadParameter):
        BaseGroupSpec("quaternion", 1)
    with pytest.raises(BadParameter):
        BaseGroupSpec.parse("zz,2")


def test_sl_su_I():
    act = action_sl_su_I(2)
    TR = act.semidirect()
    assert TR.order == 16
    v = act.T.gens[0]
    for x in involutions(TR):
        t, r = split_tr(TR, x)
        if r != act.R.identity:
            assert t in {act.T.power(v, i) for i in range(4)}
    assert rank_report(action_sl_su_I(3).semidirect()).rank == 2


def test_sl_su_II():
    act = action_sl_su_II(2)
    TR = act.semidirect()
    assert TR.order == 32
    v = act.T.gens[0]
    e = act.R.gens[0]
    z = TR.law.embed_t(act.T.power(v, 2))
    f = TR.law.embed_r(act.R.power(e, 2))
    assert TR.commute(z, f)
    N = TR.subgroup([z, f])
    assert N.is_elementary_abelian() and is_normal(N, TR)
    assert bf.ranks(action_sl_su_II(3).semidirect())[0] == 2


def test_omega_odd_action():
    act = action_omega_odd(3)
    TR = act.semidirect()
    v = act.T.gens[0]
    powers = {act.T.power(v, i) for i in range(4)}
    for x in involutions(TR):
        t, r = split_tr(TR, x)
        if r != act.R.identity:
            assert t in powers
    assert rank_report(TR).normal_rank == 1


def test_omega_even_action():
    act = action_omega_even(2)
    TR = act.semidirect()
    rep = rank_report(TR)
    assert rep.rank == 4 == rank_report(act.T).rank + 1
    d, g, h, k = (TR.law.embed_t(x) for x in act.T.gens)
    f = TR.law.embed_r(act.R.gens[1])
    for x in (TR.mul(d, g), TR.mul(TR.inv(d), g), TR.mul(h, k)):
        assert TR.commute(x, f)
    assert rank_report(action_omega_even(3).semidirect()).normal_rank == 2


@pytest.mark.parametrize("name", sorted(ACTIONS))
def test_semidirect_order(name):
    act = ACTIONS[name](2)
    assert act.semidirect().order == act.T.order * act.R.order


def test_trivial_action_is_direct_product():
    T, R = dihedral(3), quaternion(2)
    S = semidirect_product(T, R, [list(T.gens)] * len(R.gens))
    assert bf.ranks(S) == bf.ranks(direct_product(T, R))
