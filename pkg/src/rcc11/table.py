"""The RCC11 weak composition table: derivation, validation, serialization.

A composition table maps each ordered pair of base relations to the set of
base relations their composition can meet. Because RCC11 is closed under
the two dual operations and under converse, the whole 11x11 table is
determined by 15 generator cells over the dual generating set
S11 = {EQ, TPP, TPPI, NTPP, NTPPI, PON}:

  * cells with a non-generator argument rewrite to generator cells through
    the dual laws  cell(M, N^d) = cell(M, N)^d  and  cell(^dM, N) = ^d cell(M, N);
  * generator pairs not among the 15 follow from the converse law
    cell(M, N) = conv(cell(N~, M~));
  * the EQ row and column are fixed by the identity law.

Each cell entry carries an extensionality flag: a marked entry T in cell
(R, S) is one for which some model admits a pair a T c with no witness b
such that a R b and b S c. Marks transform under the same converse/dual
rewriting as the entries themselves.

The golden table shipped in ``data/rcc11_table.txt`` is an independent
transcription; tests require the derived table to reproduce it exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Mapping

from .relations import ALL_RELS, EMPTY, BaseRel, RelSet, converse, dual

R = BaseRel

S11: tuple[BaseRel, ...] = (R.EQ, R.TPP, R.TPPI, R.NTPP, R.NTPPI, R.PON)

#: The 15 ordered generator pairs whose compositions must be computed
#: directly; every other cell follows by converse/dual/identity rewriting.
#: Note (NTPPI, NTPP) is needed (it is fixed by the converse law only up to
#: itself) while (NTPPI, NTPPI) is the converse image of (NTPP, NTPP).
GENERATOR_PAIRS: tuple[tuple[BaseRel, BaseRel], ...] = (
    (R.TPP, R.TPP), (R.TPP, R.TPPI), (R.TPP, R.NTPP), (R.TPP, R.NTPPI), (R.TPP, R.PON),
    (R.TPPI, R.TPP), (R.TPPI, R.NTPP), (R.TPPI, R.PON),
    (R.NTPP, R.TPP), (R.NTPP, R.NTPP), (R.NTPP, R.NTPPI), (R.NTPP, R.PON),
    (R.NTPPI, R.NTPP), (R.NTPPI, R.PON),
    (R.PON, R.PON),
)

Cell = tuple[RelSet, RelSet]  # (entries, marked subset)
GeneratorSet = Mapping[tuple[BaseRel, BaseRel], Cell]


def _cell(entries: str, marks: str = "") -> Cell:
    e, m = RelSet.parse(entries), RelSet.parse(marks)
    if not m <= e:
        raise ValueError("marks must be a subset of the cell entries")
    return e, m


#: Generator compositions in the complemented closed disk domain (equal, by
#: the consistency theorem, to the weak compositions in every RCC model),
#: with the extensionality marks of the reduced table.
STANDARD_GENERATORS: dict[tuple[BaseRel, BaseRel], Cell] = {
    (R.TPP, R.TPP): _cell("TPP|NTPP"),
    (R.TPP, R.TPPI): _cell("EQ|TPP|TPPI|PON|ECN|DC", "PON|ECN"),
    (R.TPP, R.NTPP): _cell("NTPP"),
    (R.TPP, R.NTPPI): _cell("TPPI|NTPPI|PON|ECN|DC", "TPPI|PON|ECN"),
    (R.TPP, R.PON): _cell("TPP|NTPP|PON|ECN|DC"),
    (R.TPPI, R.TPP): _cell("EQ|TPP|TPPI|PON|PODY|PODZ", "PON|PODY"),
    (R.TPPI, R.NTPP): _cell("TPP|NTPP|PON|PODY|PODZ", "TPP|PON|PODY"),
    (R.TPPI, R.PON): _cell("TPPI|NTPPI|PON|PODY|PODZ"),
    (R.NTPP, R.TPP): _cell("NTPP"),
    (R.NTPP, R.NTPP): _cell("NTPP"),
    (R.NTPP, R.NTPPI): _cell("EQ|TPP|TPPI|NTPP|NTPPI|PON|ECN|DC"),
    (R.NTPP, R.PON): _cell("TPP|NTPP|PON|ECN|DC"),
    (R.NTPPI, R.NTPP): _cell("EQ|TPP|TPPI|NTPP|NTPPI|PON|PODY|PODZ"),
    (R.NTPPI, R.PON): _cell("TPPI|NTPPI|PON|PODY|PODZ"),
    (R.PON, R.PON): _cell("EQ|TPP|TPPI|NTPP|NTPPI|PON|PODY|PODZ|ECN|ECD|DC"),
}


@dataclass(frozen=True)
class CompTable:
    """11x11 composition table with per-entry extensionality marks."""

    cells: tuple[tuple[RelSet, ...], ...]
    marks: tuple[tuple[RelSet, ...], ...]

    def cell(self, r: BaseRel, s: BaseRel) -> RelSet:
        return self.cells[r][s]

    def mark(self, r: BaseRel, s: BaseRel) -> RelSet:
        return self.marks[r][s]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CompTable):
            return NotImplemented
        return self.cells == other.cells and self.marks == other.marks


def compose(table: CompTable, s1: RelSet, s2: RelSet) -> RelSet:
    """Weak composition of relation sets: the union of table cells over all
    pairs of members. Monotone in both arguments; {EQ} is an identity."""
    out = EMPTY
    for r1 in s1:
        for r2 in s2:
            out = out | table.cell(r1, r2)
    return out


# Rewriting data: every base relation is either in S11 or is reached from
# S11 by one dual step; record which generator relation and which side.
_AS_RIGHT_DUAL = {r.right_dual: r for r in S11}   # column rewriting: N^d -> N
_AS_LEFT_DUAL = {r.left_dual: r for r in S11}     # row rewriting: ^dM -> M


def derive_table(generators: GeneratorSet = STANDARD_GENERATORS) -> CompTable:
    """Fill all 121 cells (entries and marks) from the 15 generator cells.

    Deterministic; rejects generator sets whose domain is not exactly the
    15 required pairs.
    """
    if set(generators) != set(GENERATOR_PAIRS):
        missing = set(GENERATOR_PAIRS) - set(generators)
        extra = set(generators) - set(GENERATOR_PAIRS)
        raise ValueError(
            f"generator set must cover exactly the 15 reduced pairs; "
            f"missing={sorted(missing)} extra={sorted(extra)}"
        )

    base: dict[tuple[BaseRel, BaseRel], Cell] = {}
    for pair, (entries, marks) in generators.items():
        if not marks <= entries:
            raise ValueError(f"marks exceed entries in generator cell {pair}")
        base[pair] = (entries, marks)

    # Identity law on the generator fragment.
    for r in S11:
        singleton = RelSet.of(r)
        base[(R.EQ, r)] = (singleton, EMPTY)
        base[(r, R.EQ)] = (singleton, EMPTY)

    # Remaining S11 pairs by the converse law cell(M,N) = conv(cell(N~,M~)).
    for m in S11:
        for n in S11:
            if (m, n) in base:
                continue
            src = (n.converse, m.converse)
            if src not in base:
                raise ValueError(
                    f"cell {(m.name, n.name)} is neither given nor "
                    f"converse-reachable from the generators"
                )
            entries, marks = base[src]
            base[(m, n)] = (converse(entries), converse(marks))

    def rewrite(a: BaseRel, b: BaseRel) -> Cell:
        if a in S11 and b in S11:
            return base[(a, b)]
        m = a if a in S11 else _AS_LEFT_DUAL[a]
        n = b if b in S11 else _AS_RIGHT_DUAL[b]
        entries, marks = base[(m, n)]
        if a not in S11:
            entries, marks = dual(entries, "left"), dual(marks, "left")
        if b not in S11:
            entries, marks = dual(entries, "right"), dual(marks, "right")
        return entries, marks

    cells = tuple(tuple(rewrite(a, b)[0] for b in ALL_RELS) for a in ALL_RELS)
    marks = tuple(tuple(rewrite(a, b)[1] for b in ALL_RELS) for a in ALL_RELS)
    return CompTable(cells, marks)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    law: str
    where: tuple[str, ...]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    identities_checked: int
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_table(table: CompTable) -> ValidationReport:
    """Check every instance of the structural table laws.

    Laws checked per ordered pair (M, N): the converse law, the right- and
    left-dual laws (entries and marks), plus the identity laws and cell
    non-emptiness. The report lists every violated instance.
    """
    bad: list[Violation] = []
    checked = 0

    def expect(law: str, where: tuple[str, ...], got, want) -> None:
        nonlocal checked
        checked += 1
        if got != want:
            bad.append(Violation(law, where, f"got {got}, expected {want}"))

    for m in ALL_RELS:
        for n in ALL_RELS:
            cell, mark = table.cell(m, n), table.mark(m, n)
            where = (m.name, n.name)
            checked += 1
            if not cell:
                bad.append(Violation("non-empty", where, "cell is empty"))
            if not mark <= cell:
                bad.append(Violation("marks-subset", where,
                                     f"marks {mark} not within cell {cell}"))
            expect("converse", where,
                   table.cell(n.converse, m.converse), converse(cell))
            expect("converse-marks", where,
                   table.mark(n.converse, m.converse), converse(mark))
            expect("right-dual", where,
                   table.cell(m, n.right_dual), dual(cell, "right"))
            expect("right-dual-marks", where,
                   table.mark(m, n.right_dual), dual(mark, "right"))
            expect("left-dual", where,
                   table.cell(m.left_dual, n), dual(cell, "left"))
            expect("left-dual-marks", where,
                   table.mark(m.left_dual, n), dual(mark, "left"))

    for r in ALL_RELS:
        expect("identity", ("EQ", r.name), table.cell(R.EQ, r), RelSet.of(r))
        expect("identity", (r.name, "EQ"), table.cell(r, R.EQ), RelSet.of(r))

    return ValidationReport(checked, tuple(bad))


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------
# One line per ordered pair, sorted by (row index, column index):
#
#     R,S -> T1|T2|...
#
# An entry marked for extensionality failure carries a ``*`` suffix.
# Unmarked entries come first, then marked entries, each group in canonical
# index order; this makes the format bit-exact for golden-file comparison.

def dump_table(table: CompTable) -> str:
    lines = []
    for a in ALL_RELS:
        for b in ALL_RELS:
            cell, mark = table.cell(a, b), table.mark(a, b)
            toks = [r.name for r in cell - mark] + [f"{r.name}*" for r in mark]
            lines.append(f"{a.name},{b.name} -> {'|'.join(toks)}")
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> CompTable:
    cells = [[EMPTY] * 11 for _ in range(11)]
    marks = [[EMPTY] * 11 for _ in range(11)]
    seen: set[tuple[BaseRel, BaseRel]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            head, body = line.split("->")
            a_tok, b_tok = (t.strip() for t in head.split(","))
            a, b = BaseRel[a_tok], BaseRel[b_tok]
            entries, marked = EMPTY, EMPTY
            for tok in body.strip().split("|"):
                tok = tok.strip()
                starred = tok.endswith("*")
                rel = BaseRel[tok.rstrip("*")]
                entries = entries | RelSet.of(rel)
                if starred:
                    marked = marked | RelSet.of(rel)
        except (ValueError, KeyError) as exc:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}") from exc
        if (a, b) in seen:
            raise ValueError(f"line {lineno}: duplicate cell {a.name},{b.name}")
        seen.add((a, b))
        cells[a][b] = entries
        marks[a][b] = marked
    if len(seen) != 121:
        raise ValueError(f"expected 121 cells, found {len(seen)}")
    return CompTable(tuple(tuple(row) for row in cells),
                     tuple(tuple(row) for row in marks))


def load_table(path: str) -> CompTable:
    with open(path, encoding="utf-8") as fh:
        return parse_table(fh.read())


_GOLDEN: CompTable | None = None


def golden_table() -> CompTable:
    """The transcribed golden table (packaged data), cached."""
    global _GOLDEN
    if _GOLDEN is None:
        path = resources.files("rcc11").joinpath("data/rcc11_table.txt")
        _GOLDEN = parse_table(path.read_text("utf-8"))
    return _GOLDEN


def diff_tables(a: CompTable, b: CompTable) -> list[str]:
    """Human-readable cell-by-cell differences (empty list iff equal)."""
    out = []
    for m in ALL_RELS:
        for n in ALL_RELS:
            if a.cell(m, n) != b.cell(m, n):
                out.append(f"{m.name},{n.name}: entries {a.cell(m, n)} != {b.cell(m, n)}")
            elif a.mark(m, n) != b.mark(m, n):
                out.append(f"{m.name},{n.name}: marks {a.mark(m, n)} != {b.mark(m, n)}")
    return out
