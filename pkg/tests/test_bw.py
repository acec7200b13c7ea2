import random

import pytest

from rcc11 import bw, kernels
from rcc11.bw import BwRegion, HoleKind
from rcc11.relations import BaseRel, RelSet, converse, dual
from rcc11.table import golden_table

R = BaseRel


def region(depth, text):
    return bw.parse_region(text, depth)


# --- contact -----------------------------------------------------------

def test_contact_examples():
    a = BwRegion.cell(2, "0")
    b = BwRegion.cell(2, "1")
    assert bw.contact(a, b)                     # pair {0,1}
    assert bw.contact(a, a)                     # reflexive
    assert not bw.contact(BwRegion.cell(2, "00"), BwRegion.cell(2, "11"))


def test_contact_defies_adjacency():
    # x_01 and x_10 share the point 1/2 as intervals but are NOT in
    # combinatorial contact; x_01 and x_11 are.
    a = BwRegion.cell(3, "01")
    assert not bw.contact(a, BwRegion.cell(3, "10"))
    assert bw.contact(a, BwRegion.cell(3, "11"))


def test_contact_symmetric_exhaustive_depth2():
    full = (1 << 4) - 1
    for x in range(1, full):
        for y in range(1, full):
            assert kernels.contact_masks(x, y, 2) == kernels.contact_masks(y, x, 2)


# --- classification ----------------------------------------------------

def test_classify_examples():
    assert bw.classify11(BwRegion.cell(3, "00"), BwRegion.cell(3, "0")) is R.NTPP
    assert bw.classify11(BwRegion.cell(3, "01"), BwRegion.cell(3, "0")) is R.TPP
    assert bw.classify11(BwRegion.cell(3, "0"), BwRegion.cell(3, "1")) is R.ECD


def test_classify_depth_mismatch():
    with pytest.raises(ValueError):
        bw.classify11(BwRegion.cell(2, "0"), BwRegion.cell(3, "0"))


def test_classify_jepd_exhaustive_depth2():
    for a in bw.all_regions(2):
        for b in bw.all_regions(2):
            flags = bw.clause_flags(a, b)
            holders = [r for r, v in flags.items() if v]
            assert holders == [bw.classify11(a, b)]


@pytest.mark.parametrize("depth,samples", [(3, 400), (4, 250), (5, 150)])
def test_classify_jepd_sampled(depth, samples):
    rng = random.Random(depth)
    full = (1 << (1 << depth)) - 1
    for _ in range(samples):
        a = BwRegion(depth, rng.randrange(1, full))
        b = BwRegion(depth, rng.randrange(1, full))
        flags = bw.clause_flags(a, b)
        holders = [r for r, v in flags.items() if v]
        assert holders == [bw.classify11(a, b)]


def test_converse_and_dual_laws_sampled():
    rng = random.Random(7)
    depth = 4
    full = (1 << (1 << depth)) - 1
    for _ in range(300):
        a = BwRegion(depth, rng.randrange(1, full))
        b = BwRegion(depth, rng.randrange(1, full))
        r = bw.classify11(a, b)
        assert bw.classify11(b, a) is r.converse
        assert bw.classify11(a, b.complement()) is r.right_dual
        assert bw.classify11(a.complement(), b) is r.left_dual
        both = dual(dual(RelSet.of(r), "right"), "left")
        assert RelSet.of(bw.classify11(a.complement(), b.complement())) == both


def test_lambda_descent_property():
    # x_t NTPP a with t starting in 0 and a inside x_0 forces some cell
    # with one fewer zero fully inside a.
    rng = random.Random(3)
    depth = 4
    checked = 0
    names = [format(i, f"0{l}b") for l in range(2, depth + 1)
             for i in range(1 << l)]
    zero_names = [n for n in names if n.startswith("0")]
    half = kernels.subtree_mask(depth, "0")
    while checked < 50:
        t = rng.choice(zero_names)
        extra = rng.randrange(0, 1 << 4)
        a_mask = (kernels.subtree_mask(depth, t) | extra) & half
        if not 0 < a_mask < (1 << (1 << depth)) - 1:
            continue
        a = BwRegion(depth, a_mask)
        xt = BwRegion.cell(depth, t)
        if bw.classify11(xt, a) is not R.NTPP:
            continue
        checked += 1
        lam = bw.lambda_weight(t)
        descent = [
            n for n in names
            if bw.lambda_weight(n) == lam - 1 and a.covers(n)
        ]
        assert descent, (t, a.cells)


# --- holes --------------------------------------------------------------

def test_hole_examples():
    d = 3
    assert bw.hole(BwRegion.cell(d, "00"), BwRegion.cell(d, "01")) is HoleKind.STRICT_HOLE
    assert bw.hole(BwRegion.cell(d, "0"), BwRegion.cell(d, "1")) is HoleKind.NONE
    assert bw.hole(BwRegion.cell(d, "00"), BwRegion.cell(d, "11")) is HoleKind.NONE


def test_strict_hole_implies_ecn():
    for a in bw.all_regions(3):
        for b in bw.all_regions(3):
            if bw.hole(a, b) is HoleKind.STRICT_HOLE:
                assert bw.classify11(a, b) is R.ECN


# --- chains -------------------------------------------------------------

def test_standard_chain():
    chain = bw.standard_chain(1, 3)
    assert [c.cells for c in chain] == [BwRegion.cell(3, "00").cells,
                                        BwRegion.cell(3, "0").cells]
    for k, d in [(2, 4), (4, 5)]:
        chain = bw.standard_chain(k, d)
        assert len(chain) == k + 1
        for first, second in zip(chain, chain[1:]):
            assert bw.classify11(first, second) is R.NTPP
    assert len(bw.standard_chain(0, 3)) == 1
    with pytest.raises(ValueError):
        bw.standard_chain(3, 3)


def test_chain_exists():
    d = 4
    x0 = BwRegion.cell(d, "0")
    assert bw.chain_exists(BwRegion.cell(d, "00"), x0, 1)
    assert bw.chain_exists(BwRegion.cell(d, "000"), x0, 2)
    assert not bw.chain_exists(BwRegion.cell(d, "00"), x0, 2)
    assert not bw.chain_exists(BwRegion.cell(d, "000"), x0, 3)


# --- axioms -------------------------------------------------------------

def test_check_axioms_depth2_and_3():
    for depth in (2, 3):
        report = bw.check_axioms(depth)
        assert report["passed"], report


def test_a5_witness_example():
    x = BwRegion.cell(3, "110").complement()
    assert bw.a5_witness(x) == "1100"


# --- extensionality experiments ----------------------------------------

def test_pody_counterexample_depth3():
    report = bw.pody_counterexample(3)
    assert report["relation_ac"] == "PODY"
    assert report["tpp_witnesses"] == 0
    assert report["ntpp_witnesses"] == 0
    assert report["control_podz_witness"]
    assert report["passed"]


def test_table4_positive_triads():
    report = bw.table4_positive_triads(3)
    assert report["passed"], [t for t in report["triads"] if not t["passed"]]


# --- soundness vs golden table ------------------------------------------

def test_soundness_exhaustive_depth2():
    bits = bw.table_cell_bits(golden_table())
    assert kernels.soundness_violations(2, bits) == 0


def test_region_literals():
    r = region(3, "x(00)+x(11)")
    assert r.cells == ("000", "001", "110", "111")
    assert bw.format_region(r) == "x(00)+x(11)"
    r2 = region(3, "!x(01)")
    assert r2 == BwRegion.cell(3, "01").complement()
    assert bw.parse_region(bw.format_region(r2), 3) == r2
    with pytest.raises(ValueError):
        region(3, "y(00)")
    with pytest.raises(ValueError):
        BwRegion.from_cells(2, ["000"])
