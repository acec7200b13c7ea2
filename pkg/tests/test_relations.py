import pytest
from fractions import Fraction
from hypothesis import given
from hypothesis import strategies as st

from rcc11.relations import (
    ALL_RELS,
    CALCULI,
    EMPTY,
    FULL,
    RCC5,
    RCC7,
    RCC8,
    RCC11,
    BaseRel,
    RelSet,
    block_converse,
    block_dual,
    coarsen,
    converse,
    dual,
    dual_generating_set,
    expand,
    reduction_stats,
)

R = BaseRel

relsets = st.builds(RelSet, st.integers(min_value=0, max_value=(1 << 11) - 1))


def test_eleven_relations_fixed_order():
    assert [r.name for r in ALL_RELS] == [
        "EQ", "TPP", "TPPI", "NTPP", "NTPPI", "PON",
        "PODY", "PODZ", "ECN", "ECD", "DC",
    ]
    assert [int(r) for r in ALL_RELS] == list(range(11))


def test_converse_map():
    assert converse(RelSet.of(R.TPP)) == RelSet.of(R.TPPI)
    assert converse(RelSet.of(R.PODY)) == RelSet.of(R.PODY)
    sym = RelSet.of(R.EQ, R.PON, R.DC)
    assert converse(sym) == sym


def test_dual_tables_match_published_rows():
    # right dual row
    right = {R.TPP: R.ECN, R.TPPI: R.PODY, R.NTPP: R.DC, R.NTPPI: R.PODZ,
             R.PON: R.PON, R.PODY: R.TPPI, R.PODZ: R.NTPPI, R.ECN: R.TPP,
             R.ECD: R.EQ, R.DC: R.NTPP, R.EQ: R.ECD}
    left = {R.TPP: R.PODY, R.TPPI: R.ECN, R.NTPP: R.PODZ, R.NTPPI: R.DC,
            R.PON: R.PON, R.PODY: R.TPP, R.PODZ: R.NTPP, R.ECN: R.TPPI,
            R.ECD: R.EQ, R.DC: R.NTPPI, R.EQ: R.ECD}
    for r in ALL_RELS:
        assert r.right_dual == right[r]
        assert r.left_dual == left[r]


def test_spec_dual_examples():
    assert dual(RelSet.of(R.TPP), "right") == RelSet.of(R.ECN)
    assert dual(RelSet.of(R.NTPP), "left") == RelSet.of(R.PODZ)
    assert dual(RelSet.of(R.PON), "right") == RelSet.of(R.PON)


@given(relsets)
def test_involutions(s):
    assert converse(converse(s)) == s
    assert dual(dual(s, "right"), "right") == s
    assert dual(dual(s, "left"), "left") == s


@given(relsets)
def test_dual_commutation(s):
    assert dual(dual(s, "right"), "left") == dual(dual(s, "left"), "right")


@given(relsets)
def test_mixed_converse_dual_law(s):
    # conv(conv(S)^d) = ^dS
    assert converse(dual(converse(s), "right")) == dual(s, "left")


def test_left_then_right_dual_is_converse_on_generators():
    for r in (R.EQ, R.TPP, R.TPPI, R.NTPP, R.NTPPI, R.PON):
        assert dual(dual(RelSet.of(r), "left"), "right") == converse(RelSet.of(r))


def test_relset_semantics():
    s = RelSet.parse("TPP|NTPP")
    assert R.TPP in s and R.NTPP in s and R.EQ not in s
    assert len(s | s) == 2  # idempotent union
    assert (s & RelSet.of(R.TPP)) == RelSet.of(R.TPP)
    assert str(s) == "TPP|NTPP"
    assert RelSet.parse(str(FULL)) == FULL
    assert RelSet.parse("") == EMPTY
    assert not EMPTY and FULL


def test_partitions_are_jepd():
    for calc in CALCULI.values():
        union = EMPTY
        for block in calc.partition.values():
            assert not (union & block)
            union = union | block
        assert union == FULL


def test_coarsen_expand_examples():
    assert coarsen(R.PODY, RCC8) == "PO"
    assert expand("DN", RCC7) == RelSet.of(R.ECN, R.DC)
    assert coarsen(R.ECD, RCC5) == "DR"
    for r in ALL_RELS:
        for calc in CALCULI.values():
            assert r in expand(coarsen(r, calc), calc)
    with pytest.raises(ValueError):
        expand("NOPE", RCC7)


def test_rcc7_dual_table_rows():
    # published dual table for the 7-relation system, checked blockwise
    right = {"PP": "DN", "PPI": "POD", "PON": "PON", "POD": "PPI",
             "DN": "PP", "ECD": "EQ", "EQ": "ECD"}
    left = {"PP": "POD", "PPI": "DN", "PON": "PON", "POD": "PP",
            "DN": "PPI", "ECD": "EQ", "EQ": "ECD"}
    both = {"PP": "PPI", "PPI": "PP", "PON": "PON", "POD": "DN",
            "DN": "POD", "ECD": "ECD", "EQ": "EQ"}
    for label in RCC7.partition:
        assert block_dual(RCC7, label, "right") == right[label]
        assert block_dual(RCC7, label, "left") == left[label]
        assert block_dual(RCC7, block_dual(RCC7, label, "right"), "left") == both[label]
    # double dual coincides with converse exactly on the generating set
    for label in ("EQ", "PP", "PPI", "PON"):
        assert block_converse(RCC7, label) == both[label]
    assert block_converse(RCC7, "POD") == "POD"
    assert block_converse(RCC7, "DN") == "DN"


def test_reduction_stats():
    s11 = reduction_stats(RCC11)
    assert (s11.r, s11.s, s11.m, s11.n, s11.T) == (11, 6, 1, 4, 15)
    assert s11.ratio == Fraction(15, 121) and s11.ratio < Fraction(1, 8)
    s7 = reduction_stats(RCC7)
    assert (s7.r, s7.s, s7.m, s7.n, s7.T) == (7, 4, 1, 2, 6)
    assert s7.ratio == Fraction(6, 49) and s7.ratio < Fraction(1, 8)
    assert 6 * (6 - 1) // 2 == 15  # s(s-1)/2 arithmetic
    assert set(dual_generating_set(RCC11)) == {"EQ", "TPP", "TPPI", "NTPP", "NTPPI", "PON"}


def test_reduction_stats_rejects_non_dual_calculi():
    for calc in (RCC8, RCC5):
        with pytest.raises(ValueError):
            reduction_stats(calc)
