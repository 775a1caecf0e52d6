import pytest

import bruteforce as bf
from sylowrank.catalog import (
    FamilySpec,
    TableEntry,
    canonical_family,
    construct_sylow,
    ord2_qsq_minus_1,
    supported_specs,
    sylow_order,
    table_entry,
    twist_data,
    verify,
)
from sylowrank.constructions import adic
from sylowrank.errors import BadParameter, UnsupportedCase
from sylowrank.oracle import gl2, invariant_fingerprint, sylow2
from sylowrank.rank import rank_report


@pytest.mark.parametrize("q,want", [(3, 3), (5, 3), (7, 4), (9, 4), (17, 5)])
def test_ord2(q, want):
    assert ord2_qsq_minus_1(q) == want


def test_ord2_rejects_even():
    with pytest.raises(BadParameter):
        ord2_qsq_minus_1(4)


def test_adic_digits():
    assert adic(1).digits == (0,)
    assert adic(6).digits == (1, 2)
    assert adic(7).digits == (0, 1, 2)


def test_family_spec_validation():
    with pytest.raises(BadParameter):
        FamilySpec("sl", 4, 6)
    with pytest.raises(UnsupportedCase):
        FamilySpec("sl", 4, 4)
    with pytest.raises(BadParameter):
        FamilySpec("nonsense", 4, 3)
    assert FamilySpec("SL", 4, 3).family == canonical_family("sl")


@pytest.mark.parametrize("family,n,q,want", [
    ("sl", 4, 3, (3, 2)), ("sp", 6, 3, (3, 3)), ("sp", 6, 5, (3, 3)), ("u", 5, 5, (5, 3)),
])
def test_table_examples(family, n, q, want):
    e = table_entry(FamilySpec(family, n, q))
    assert (e.rank, e.normal_rank) == want and e.row


def test_table_rejects_wrong_parity():
    with pytest.raises(UnsupportedCase):
        table_entry(FamilySpec("sp", 5, 3))
    with pytest.raises(UnsupportedCase):
        table_entry(FamilySpec("omega_odd", 4, 3))
    with pytest.raises(UnsupportedCase):
        table_entry(FamilySpec("omega_even_plus", 2, 3))


def test_omega3_outside_table():
    spec = FamilySpec("omega_odd", 3, 7)
    with pytest.raises(UnsupportedCase):
        table_entry(spec)
    G = construct_sylow(spec)
    assert G.order == 8
    assert bf.ranks(G) == (2, 2)


def test_construct_examples():
    Sp4 = construct_sylow(FamilySpec("sp", 4, 3))
    assert Sp4.order == 128
    O5 = construct_sylow(FamilySpec("omega_odd", 5, 3))
    assert rank_report(O5).rank == 4
    GL2 = construct_sylow(FamilySpec("gl", 2, 3))
    assert GL2.order == 16
    assert invariant_fingerprint(GL2) == invariant_fingerprint(sylow2(gl2(3)))


@pytest.mark.parametrize("family,n,q,want", [
    ("sl", 4, 3, (3, 2)), ("sl", 4, 5, (3, 3)), ("omega_even_plus", 4, 7, (3, 2)),
])
def test_verify_examples(family, n, q, want):
    rep = verify(FamilySpec(family, n, q))
    assert rep.match and (rep.report.rank, rep.report.normal_rank) == want
    row = rep.to_json(timings=False)
    assert "millis" not in row and row["match"] is True


def test_verify_reports_mismatch():
    rep = verify(FamilySpec("sp", 4, 3), expected=TableEntry(3, 3))
    assert not rep.match


def test_twist_data_shapes():
    assert twist_data(FamilySpec("sp", 4, 3)) is None
    params, blocks = twist_data(FamilySpec("sl", 6, 3))
    assert blocks == 3 and params.T.order == 8


def test_supported_specs_bounded():
    specs = supported_specs(512)
    assert specs and all(sylow_order(s) <= 512 for s in specs)
    assert len({(s.family, s.n, s.q) for s in specs}) == len(specs)


@pytest.mark.parametrize("spec", supported_specs(256), ids=lambda s: s.label())
def test_small_table_rows(spec):
    G = construct_sylow(spec)
    assert G.order == sylow_order(spec)
    e = table_entry(spec)
    assert bf.ranks(G) == (e.rank, e.normal_rank)
