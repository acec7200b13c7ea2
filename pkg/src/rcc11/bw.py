"""Truncated dyadic model: the least RCC model over binary-string cells.

Cells are binary strings s naming half-open dyadic subintervals of [0,1):
the children s0, s1 halve the interval of s. A region at truncation depth d
is a nonempty proper set of depth-d cells. Contact is combinatorial: two
regions are in contact when their cell sets intersect, or when for some
prefix s1 and some n one region covers the whole subtree s1·0·1^n while the
other covers s1·1·1^n.

That definition is taken as written even where it defies interval-closure
intuition: adjacent intervals such as x_01 and x_10 are NOT in contact
(no pair of the required shape matches them), while x_01 and x_11 are.

Classification into the 11 relations uses the orthocomplemented-lattice
characterizations of the relations (parthood is cell-set inclusion,
complement is relative to the full depth-d cell set). The unbounded
quantifier in the contact definition reduces to a bounded enumeration at
depth d: a deeper qualifying pair forces its depth-d ancestor pair, which
is either an overlap or itself enumerated.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .relations import BaseRel
from .table import CompTable, golden_table

R = BaseRel


@dataclass(frozen=True)
class BwRegion:
    """A region of the depth-d truncated model: a bitmask over 2^d cells.

    Bit i corresponds to the cell whose d-digit binary name has value i.
    Never empty, never all cells (0 and 1 are not regions).
    """

    depth: int
    mask: int

    def __post_init__(self) -> None:
        full = (1 << (1 << self.depth)) - 1
        if not 0 < self.mask < full:
            raise ValueError("a region is a nonempty proper set of cells")

    @classmethod
    def from_cells(cls, depth: int, names: Iterable[str]) -> "BwRegion":
        mask = 0
        for name in names:
            mask |= kernels.subtree_mask(depth, name)
        return cls(depth, mask)

    @classmethod
    def cell(cls, depth: int, name: str) -> "BwRegion":
        return cls(depth, kernels.subtree_mask(depth, name))

    @property
    def cells(self) -> tuple[str, ...]:
        d = self.depth
        return tuple(format(i, f"0{d}b") for i in range(1 << d)
                     if self.mask >> i & 1)

    def complement(self) -> "BwRegion":
        full = (1 << (1 << self.depth)) - 1
        return BwRegion(self.depth, full ^ self.mask)

    def union(self, other: "BwRegion") -> "BwRegion":
        _check_depths(self, other)
        return BwRegion(self.depth, self.mask | other.mask)

    def covers(self, name: str) -> bool:
        m = kernels.subtree_mask(self.depth, name)
        return self.mask & m == m

    def __str__(self) -> str:
        return format_region(self)


def _check_depths(a: BwRegion, b: BwRegion) -> None:
    if a.depth != b.depth:
        raise ValueError(f"depth mismatch: {a.depth} != {b.depth}")


def all_regions(depth: int) -> Iterator[BwRegion]:
    full = (1 << (1 << depth)) - 1
    return (BwRegion(depth, m) for m in range(1, full))


# ---------------------------------------------------------------------------
# Region literals: x(00)+x(11), !x(01)
# ---------------------------------------------------------------------------

def parse_region(text: str, depth: int) -> BwRegion:
    text = text.strip()
    negate = text.startswith("!")
    if negate:
        text = text[1:].strip()
    mask = 0
    for term in text.split("+"):
        term = term.strip()
        if not (term.startswith("x(") and term.endswith(")")):
            raise ValueError(f"bad region term {term!r}")
        mask |= kernels.subtree_mask(depth, term[2:-1])
    region = BwRegion(depth, mask)
    return region.complement() if negate else region


def format_region(region: BwRegion) -> str:
    """Canonical literal: maximal complete subtrees, left to right."""
    names: list[str] = []

    def walk(name: str) -> None:
        m = kernels.subtree_mask(region.depth, name)
        if region.mask & m == m:
            names.append(name)
            return
        if region.mask & m and len(name) < region.depth:
            walk(name + "0")
            walk(name + "1")

    walk("0")
    walk("1")
    return "+".join(f"x({n})" for n in names)


# ---------------------------------------------------------------------------
# Contact and classification
# ---------------------------------------------------------------------------

def contact(a: BwRegion, b: BwRegion) -> bool:
    _check_depths(a, b)
    return kernels.contact_masks(a.mask, b.mask, a.depth)


def classify11(a: BwRegion, b: BwRegion) -> BaseRel:
    _check_depths(a, b)
    return BaseRel(kernels.classify_masks(a.mask, b.mask, a.depth))


def clause_flags(a: BwRegion, b: BwRegion) -> dict[BaseRel, bool]:
    """All 11 defining clauses evaluated independently (JEPD oracle)."""
    _check_depths(a, b)
    d, am, bm = a.depth, a.mask, b.mask
    full = (1 << (1 << d)) - 1
    ca, cb = full ^ am, full ^ bm
    C = lambda x, y: kernels.contact_masks(x, y, d)
    proper = lambda x, y: x != y and x & ~y == 0
    return {
        R.EQ: am == bm,
        R.TPP: proper(am, bm) and C(am, cb),
        R.NTPP: proper(am, bm) and not C(am, cb),
        R.TPPI: proper(bm, am) and C(bm, ca),
        R.NTPPI: proper(bm, am) and not C(bm, ca),
        R.PON: bool(am & bm) and bool(am & cb) and bool(ca & bm)
               and (am | bm) != full,
        R.PODY: proper(cb, am) and C(ca, cb),
        R.PODZ: proper(cb, am) and not C(ca, cb),
        R.ECN: proper(am, cb) and C(am, bm),
        R.ECD: am == cb,
        R.DC: not C(am, bm),
    }


def contact_lifted(a: BwRegion, name: str) -> bool:
    """Contact between a depth-d region and the cell x_name, where the cell
    may be deeper than d; both are lifted to the finer depth."""
    d = max(a.depth, len(name))
    lifted = _lift_mask(a.mask, a.depth, d)
    return kernels.contact_masks(lifted, kernels.subtree_mask(d, name), d)


def _lift_mask(mask: int, depth: int, new_depth: int) -> int:
    if new_depth == depth:
        return mask
    factor = 1 << (new_depth - depth)
    block = (1 << factor) - 1
    out = 0
    for i in range(1 << depth):
        if mask >> i & 1:
            out |= block << (i * factor)
    return out


# ---------------------------------------------------------------------------
# Holes
# ---------------------------------------------------------------------------

class HoleKind(enum.Enum):
    NONE = "none"
    HOLE = "hole"
    STRICT_HOLE = "strict_hole"


def hole(a: BwRegion, b: BwRegion) -> HoleKind:
    """a is a hole of b: externally connected to b and a non-tangential
    proper part of the union. If the union is the unit (in particular when
    a and b are complements), the unit is not a region and the result is
    NONE; consequently only non-trivial holes are ever reported."""
    _check_depths(a, b)
    d = a.depth
    full = (1 << (1 << d)) - 1
    if a.mask & b.mask or not kernels.contact_masks(a.mask, b.mask, d):
        return HoleKind.NONE  # not externally connected
    join = a.mask | b.mask
    if join == full:
        return HoleKind.NONE
    if kernels.contact_masks(a.mask, full ^ join, d):
        return HoleKind.NONE  # tangential part of the union
    if b.mask != full ^ a.mask:
        return HoleKind.STRICT_HOLE
    return HoleKind.HOLE


# ---------------------------------------------------------------------------
# NTPP chains
# ---------------------------------------------------------------------------

def standard_chain(k: int, depth: int) -> list[BwRegion]:
    """[x_{0^(k+1)}, x_{0^k}, ..., x_0]; adjacent pairs classify as NTPP."""
    if k + 1 > depth:
        raise ValueError(f"need depth >= {k + 1} for a k={k} chain")
    return [BwRegion.cell(depth, "0" * i) for i in range(k + 1, 0, -1)]


def chain_exists(a: BwRegion, b: BwRegion, length: int) -> bool:
    """Is there a chain a = r0 NTPP r1 ... NTPP r_length = b with every
    intermediate a depth-d region? Intermediates necessarily sit inside b,
    so the search enumerates subsets of b's cells (breadth-first, with the
    frontier deduplicated)."""
    _check_depths(a, b)
    if length < 0:
        raise ValueError("length must be >= 0")
    if length == 0:
        return a.mask == b.mask
    d = a.depth

    def ntpp(x: int, y: int) -> bool:
        full = (1 << (1 << d)) - 1
        return x != y and x & ~y == 0 and not kernels.contact_masks(
            x, full ^ y, d)

    frontier = {a.mask}
    for _ in range(length):
        nxt: set[int] = set()
        for r in frontier:
            rem = b.mask & ~r
            s = rem
            while s:
                cand = r | s
                if ntpp(r, cand):
                    nxt.add(cand)
                s = (s - 1) & rem
        if not nxt:
            return False
        frontier = nxt
    return b.mask in frontier


def lambda_weight(name: str) -> int:
    """Number of zeros in a cell name; strictly decreases along NTPP steps
    out of a cell toward x_0."""
    return name.count("0")


# ---------------------------------------------------------------------------
# Axiom checks
# ---------------------------------------------------------------------------

def a5_witness(x: BwRegion, max_extra_depth: int = 2) -> str | None:
    """First cell name (by length, then lexicographically) not in contact
    with x, searching cells down to depth + max_extra_depth."""
    for length in range(1, x.depth + max_extra_depth + 1):
        for i in range(1 << length):
            name = format(i, f"0{length}b")
            if not contact_lifted(x, name):
                return name
    return None


def check_axioms(depth: int = 3, a5_extra_depth: int = 2) -> dict:
    """Exhaustive connection-axiom report for the truncated model.

    A2 reflexivity/symmetry and A3 contact-with-complement run over all
    regions; A4 distributivity over all region triples (joins reaching the
    unit count as contact); A5 searches a non-contacting witness cell for
    every region.
    """
    full = (1 << (1 << depth)) - 1
    n_regions = full - 1
    grid = kernels.contact_grid(depth)

    reflexive_bad = int(np.count_nonzero(
        ~grid.diagonal()[1:full]))
    symmetric_bad = int(np.count_nonzero(grid != grid.T))

    a3_bad = sum(
        1 for m in range(1, full) if not grid[m, full ^ m]
    )

    a4_bad = kernels.a4_violations(depth)

    a5_missing: list[str] = []
    for region in all_regions(depth):
        if a5_witness(region, a5_extra_depth) is None:
            a5_missing.append(format_region(region))

    report = {
        "depth": depth,
        "regions": n_regions,
        "a2": {"reflexivity_violations": reflexive_bad,
               "symmetry_violations": symmetric_bad,
               "passed": reflexive_bad == 0 and symmetric_bad == 0},
        "a3": {"violations": a3_bad, "passed": a3_bad == 0},
        "a4": {"triples": n_regions ** 3, "violations": a4_bad,
               "passed": a4_bad == 0},
        "a5": {"witness_max_depth": depth + a5_extra_depth,
               "regions_without_witness": a5_missing,
               "passed": not a5_missing},
    }
    report["passed"] = all(report[k]["passed"] for k in ("a2", "a3", "a4", "a5"))
    return report


# ---------------------------------------------------------------------------
# Extensionality experiments
# ---------------------------------------------------------------------------

def pody_counterexample(depth: int = 3) -> dict:
    """The two non-extensional triads witnessed in the truncated model.

    With a = x_0 and c = complement(x_01) we get a PODY c, yet no region b
    satisfies a TPPI b together with b TPP c, and none with b NTPP c: any
    such b sits below a ∧ c = x_00, which is already a non-tangential part
    of a. A control PODZ triad with witness b = a ∧ c is checked alongside.
    """
    if depth < 3:
        raise ValueError("needs depth >= 3")
    full = (1 << (1 << depth)) - 1
    a = BwRegion.cell(depth, "0")
    c = BwRegion.cell(depth, "01").complement()
    rel_ac = classify11(a, c)

    masks = np.arange(1, full, dtype=np.int64)
    a_rep = np.full(masks.shape, a.mask, dtype=np.int64)
    c_rep = np.full(masks.shape, c.mask, dtype=np.int64)
    rel_ab = kernels.classify_pairs(a_rep, masks, depth)
    rel_bc = kernels.classify_pairs(masks, c_rep, depth)

    tppi_b = rel_ab == int(R.TPPI)
    tpp_witnesses = int(np.count_nonzero(tppi_b & (rel_bc == int(R.TPP))))
    ntpp_witnesses = int(np.count_nonzero(tppi_b & (rel_bc == int(R.NTPP))))

    # control: <TPPI, PODZ, TPP> with b = a ∧ c has a witness
    c2 = BwRegion.cell(depth, "00").complement()
    b2 = BwRegion(depth, a.mask & c2.mask)
    control_ok = (classify11(a, c2) is R.PODZ
                  and classify11(a, b2) is R.TPPI
                  and classify11(b2, c2) is R.TPP)

    return {
        "depth": depth,
        "a": format_region(a),
        "c": format_region(c),
        "relation_ac": rel_ac.name,
        "candidates_checked": int(masks.shape[0]),
        "tpp_witnesses": tpp_witnesses,
        "ntpp_witnesses": ntpp_witnesses,
        "control_podz_witness": control_ok,
        "passed": (rel_ac is R.PODY and tpp_witnesses == 0
                   and ntpp_witnesses == 0 and control_ok),
    }


def _proper_parts(region_mask: int, depth: int) -> Iterator[int]:
    """Nonempty proper submasks, smallest first (singles, then pairs)."""
    bits = [i for i in range(1 << depth) if region_mask >> i & 1]
    for size in (1, 2):
        for combo in combinations(bits, size):
            m = 0
            for i in combo:
                m |= 1 << i
            if m != region_mask:
                yield m


def _ntpp_parts(region_mask: int, depth: int) -> Iterator[int]:
    """Proper submasks that are NTPP parts, smallest first."""
    full = (1 << (1 << depth)) - 1
    for m in _proper_parts(region_mask, depth):
        if not kernels.contact_masks(m, full ^ region_mask, depth):
            yield m


def table4_positive_triads(depth: int = 3) -> dict:
    """Witness constructions for the nine positive composition triads.

    For each triad <Rrel, T, Srel> the recipe builds b from Boolean parts
    of a suitable instance (a, c) of T; success means classify(a,b) = Rrel
    and classify(b,c) = Srel. Instances are searched in deterministic mask
    order until a recipe application verifies.
    """
    full = (1 << (1 << depth)) - 1
    grid = kernels.classify_grid(depth)

    def instances(t: BaseRel) -> Iterator[tuple[int, int]]:
        rows, cols = np.nonzero(grid == int(t))
        for am, cm in zip(rows.tolist(), cols.tolist()):
            yield am, cm

    def recipe_candidates(name: str, am: int, cm: int) -> Iterator[int]:
        ca, cc = full ^ am, full ^ cm
        meet = am & cm
        if name == "b=a^c":
            if meet:
                yield meet
        elif name == "b=a-m; c' NTPP m NTPP a":
            rem = am & ~cc
            s = rem
            while s:
                m = cc | s
                if (not kernels.contact_masks(cc, full ^ m, depth)
                        and m != am
                        and not kernels.contact_masks(m, ca, depth)):
                    if am & ~m:
                        yield am & ~m
                s = (s - 1) & rem
        elif name == "b=m+n; m<c' with C(m,a'), n=a^c":
            # b must keep boundary contact with a' (through a part of c')
            # without absorbing all of c', or its union with c becomes 1.
            if meet:
                for m in _proper_parts(cc, depth):
                    if kernels.contact_masks(m, ca, depth):
                        yield m | meet
        elif name == "b=m+n; m NTPP c', n=a^c":
            if meet:
                for m in _ntpp_parts(cc, depth):
                    yield m | meet
        elif name == "b=m+n; m NTPP c', n NTPP a^c":
            if meet:
                for m in _ntpp_parts(cc, depth):
                    for n in _ntpp_parts(meet, depth):
                        yield m | n
        elif name == "b=m+n; m NTPP c', n NTPP a'":
            for m in _ntpp_parts(cc, depth):
                for n in _ntpp_parts(ca, depth):
                    yield m | n
        else:  # pragma: no cover
            raise AssertionError(name)

    triads = [
        (R.TPPI, R.PODZ, R.TPP, "b=a^c"),
        (R.TPPI, R.PODZ, R.NTPP, "b=a-m; c' NTPP m NTPP a"),
        (R.TPPI, R.PODY, R.PON, "b=m+n; m<c' with C(m,a'), n=a^c"),
        (R.TPPI, R.PODZ, R.PON, "b=m+n; m NTPP c', n=a^c"),
        (R.NTPPI, R.PODY, R.PON, "b=m+n; m NTPP c', n NTPP a^c"),
        (R.NTPPI, R.PODZ, R.PON, "b=m+n; m NTPP c', n NTPP a^c"),
        (R.PON, R.PODY, R.PON, "b=m+n; m NTPP c', n NTPP a'"),
        (R.PON, R.PODZ, R.PON, "b=m+n; m NTPP c', n NTPP a'"),
        (R.PON, R.ECD, R.PON, "b=m+n; m NTPP c', n NTPP a'"),
    ]

    results = []
    for rrel, t, srel, recipe in triads:
        witness = None
        for am, cm in instances(t):
            for bm in recipe_candidates(recipe, am, cm):
                if not 0 < bm < full:
                    continue
                if (kernels.classify_masks(am, bm, depth) == int(rrel)
                        and kernels.classify_masks(bm, cm, depth) == int(srel)):
                    witness = {
                        "a": format_region(BwRegion(depth, am)),
                        "b": format_region(BwRegion(depth, bm)),
                        "c": format_region(BwRegion(depth, cm)),
                    }
                    break
            if witness:
                break
        results.append({
            "triad": f"<{rrel.name},{t.name},{srel.name}>",
            "recipe": recipe,
            "witness": witness,
            "passed": witness is not None,
        })

    return {
        "depth": depth,
        "triads": results,
        "passed": all(r["passed"] for r in results),
    }


def table_cell_bits(table: CompTable | None = None) -> np.ndarray:
    """11x11 array of the table's cell bitmasks, for the kernel sweeps."""
    t = table or golden_table()
    out = np.zeros((11, 11), dtype=np.int64)
    for a in BaseRel:
        for b in BaseRel:
            out[a, b] = t.cell(a, b).mask
    return out
