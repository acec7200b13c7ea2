import pytest

from rcc11.relations import ALL_RELS, EMPTY, BaseRel, RelSet, converse
from rcc11.table import (
    GENERATOR_PAIRS,
    STANDARD_GENERATORS,
    CompTable,
    compose,
    derive_table,
    diff_tables,
    dump_table,
    golden_table,
    parse_table,
    validate_table,
)

R = BaseRel


def test_generator_domain_is_the_fifteen_reduced_pairs():
    assert len(GENERATOR_PAIRS) == 15
    assert set(STANDARD_GENERATORS) == set(GENERATOR_PAIRS)
    # every non-generator pair over the generating relations is
    # converse-reachable from a generator
    s11 = (R.EQ, R.TPP, R.TPPI, R.NTPP, R.NTPPI, R.PON)
    for m in s11:
        for n in s11:
            if m is R.EQ or n is R.EQ or (m, n) in STANDARD_GENERATORS:
                continue
            assert (n.converse, m.converse) in STANDARD_GENERATORS, (m, n)


def test_derived_equals_golden_cell_for_cell():
    assert diff_tables(derive_table(), golden_table()) == []


def test_golden_validates_clean():
    report = validate_table(golden_table())
    assert report.ok
    assert report.identities_checked > 700


def test_identity_and_nonempty():
    t = golden_table()
    for r in ALL_RELS:
        assert t.cell(R.EQ, r) == RelSet.of(r)
        assert t.cell(r, R.EQ) == RelSet.of(r)
        for s in ALL_RELS:
            assert t.cell(r, s)


def test_known_cells():
    t = golden_table()
    assert t.cell(R.TPPI, R.TPP) == RelSet.parse("EQ|TPP|TPPI|PON|PODY|PODZ")
    assert t.cell(R.TPPI, R.TPPI) == converse(t.cell(R.TPP, R.TPP)) == RelSet.parse("TPPI|NTPPI")
    assert t.cell(R.ECD, R.ECD) == RelSet.of(R.EQ)
    assert t.cell(R.DC, R.PODZ) == RelSet.of(R.NTPP)
    assert t.cell(R.NTPP, R.NTPP) == RelSet.of(R.NTPP)
    # the corrected transcription cell and its printed converse partner
    assert t.cell(R.TPPI, R.ECN) == RelSet.parse("TPPI|NTPPI|PON|PODY|ECN|ECD")
    assert t.cell(R.ECN, R.TPP) == converse(t.cell(R.TPPI, R.ECN))


def test_compose():
    t = golden_table()
    assert compose(t, RelSet.of(R.TPPI), RelSet.of(R.TPP)) == \
        RelSet.parse("EQ|TPP|TPPI|PON|PODY|PODZ")
    assert compose(t, RelSet.of(R.ECD), RelSet.of(R.ECD)) == RelSet.of(R.EQ)
    assert compose(t, RelSet.of(R.ECN), RelSet.of(R.ECN)) == t.cell(R.TPP, R.TPPI)
    # identity and monotonicity
    s = RelSet.parse("TPP|PODY|DC")
    assert compose(t, RelSet.of(R.EQ), s) == s
    assert compose(t, s, RelSet.of(R.EQ)) == s
    bigger = s | RelSet.of(R.PON)
    assert compose(t, s, s) <= compose(t, bigger, bigger)
    assert compose(t, EMPTY, s) == EMPTY


SIXTEEN_EQUATIONS = [
    ((R.PODY, R.PODY), (R.TPPI, R.TPP)),
    ((R.PODY, R.PODZ), (R.TPPI, R.NTPP)),
    ((R.PODY, R.ECN), (R.TPPI, R.TPPI)),
    ((R.PODY, R.DC), (R.TPPI, R.NTPPI)),
    ((R.PODZ, R.PODY), (R.NTPPI, R.TPP)),
    ((R.PODZ, R.PODZ), (R.NTPPI, R.NTPP)),
    ((R.PODZ, R.ECN), (R.NTPPI, R.TPPI)),
    ((R.PODZ, R.DC), (R.NTPPI, R.NTPPI)),
    ((R.ECN, R.PODY), (R.TPP, R.TPP)),
    ((R.ECN, R.PODZ), (R.TPP, R.NTPP)),
    ((R.ECN, R.ECN), (R.TPP, R.TPPI)),
    ((R.ECN, R.DC), (R.TPP, R.NTPPI)),
    ((R.DC, R.PODY), (R.NTPP, R.TPP)),
    ((R.DC, R.PODZ), (R.NTPP, R.NTPP)),
    ((R.DC, R.ECN), (R.NTPP, R.TPPI)),
    ((R.DC, R.DC), (R.NTPP, R.NTPPI)),
]


@pytest.mark.parametrize("lhs,rhs", SIXTEEN_EQUATIONS)
def test_sixteen_dual_equations(lhs, rhs):
    t = golden_table()
    assert compose(t, RelSet.of(lhs[0]), RelSet.of(lhs[1])) == \
        compose(t, RelSet.of(rhs[0]), RelSet.of(rhs[1]))


def test_validate_catches_injected_faults():
    t = golden_table()
    cells = [list(row) for row in t.cells]
    cells[R.TPP][R.TPP] = RelSet.of(R.DC)
    bad = CompTable(tuple(tuple(r) for r in cells), t.marks)
    report = validate_table(bad)
    assert not report.ok
    assert any(v.law == "converse" and v.where == ("TPPI", "TPPI")
               for v in report.violations)

    cells = [list(row) for row in t.cells]
    cells[R.PON][R.PON] = EMPTY
    empty_cell = CompTable(tuple(tuple(r) for r in cells), t.marks)
    assert any(v.law == "non-empty" for v in validate_table(empty_cell).violations)


def test_derive_rejects_incomplete_generators():
    partial = dict(STANDARD_GENERATORS)
    del partial[(R.PON, R.PON)]
    with pytest.raises(ValueError):
        derive_table(partial)
    extra = dict(STANDARD_GENERATORS)
    extra[(R.NTPPI, R.NTPPI)] = extra[(R.NTPP, R.NTPP)]
    with pytest.raises(ValueError):
        derive_table(extra)


def test_text_format_round_trip_and_example_line():
    t = golden_table()
    text = dump_table(t)
    assert parse_table(text) == t
    assert "TPP,TPPI -> EQ|TPP|TPPI|DC|PON*|ECN*" in text.splitlines()
    assert len(text.splitlines()) == 121
    with pytest.raises(ValueError):
        parse_table(text + "TPP,TPP -> DC\n")  # duplicate cell
    with pytest.raises(ValueError):
        parse_table("garbage\n")


def test_marks_total():
    # ten distinct negative triads on the reduced generating fragment
    t = golden_table()
    reduced_marks = sum(
        len(t.mark(a, b)) for (a, b) in GENERATOR_PAIRS
    )
    assert reduced_marks == 10
