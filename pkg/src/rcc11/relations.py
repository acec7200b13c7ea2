"""Base relations of the RCC11 calculus and set-level operations on them.

The eleven jointly-exhaustive, pairwise-disjoint (JEPD) relations refine
RCC8 so that the relation set is closed under complementing either
argument: external contact splits by whether the arguments are exact
complements (ECN vs ECD) and partial overlap splits by whether the union
covers the whole space and whether the boundaries meet (PON, PODY, PODZ).

Besides converse, two unary "dual" operations act on relations:

    right dual  R^d : x R^d y  iff  x R y'
    left dual   ^dR : ^dR(x,y) iff  x' R y

Both are involutions, they commute, and RCC11 is closed under them, which
is what makes the 15-generator table derivation in :mod:`rcc11.table` work.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Literal, Mapping


class BaseRel(enum.IntEnum):
    """One of the 11 RCC11 base relations, with a fixed canonical index."""

    EQ = 0
    TPP = 1
    TPPI = 2
    NTPP = 3
    NTPPI = 4
    PON = 5
    PODY = 6
    PODZ = 7
    ECN = 8
    ECD = 9
    DC = 10

    @property
    def converse(self) -> "BaseRel":
        return _CONVERSE[self]

    @property
    def right_dual(self) -> "BaseRel":
        return _RIGHT_DUAL[self]

    @property
    def left_dual(self) -> "BaseRel":
        return _LEFT_DUAL[self]

    def __str__(self) -> str:  # tokens are the canonical serialization
        return self.name


ALL_RELS: tuple[BaseRel, ...] = tuple(BaseRel)

# Only TPP and NTPP have distinct converses; everything else is symmetric.
# This map is derived from the lattice characterizations of the relations
# (order reversal of complement plus symmetry of contact) and is machine
# validated in the tests both algebraically (left-then-right dual equals
# converse on the generating set) and semantically against the disk domain.
_CONVERSE = {
    BaseRel.EQ: BaseRel.EQ,
    BaseRel.TPP: BaseRel.TPPI,
    BaseRel.TPPI: BaseRel.TPP,
    BaseRel.NTPP: BaseRel.NTPPI,
    BaseRel.NTPPI: BaseRel.NTPP,
    BaseRel.PON: BaseRel.PON,
    BaseRel.PODY: BaseRel.PODY,
    BaseRel.PODZ: BaseRel.PODZ,
    BaseRel.ECN: BaseRel.ECN,
    BaseRel.ECD: BaseRel.ECD,
    BaseRel.DC: BaseRel.DC,
}

_RIGHT_DUAL = {
    BaseRel.EQ: BaseRel.ECD,
    BaseRel.TPP: BaseRel.ECN,
    BaseRel.TPPI: BaseRel.PODY,
    BaseRel.NTPP: BaseRel.DC,
    BaseRel.NTPPI: BaseRel.PODZ,
    BaseRel.PON: BaseRel.PON,
    BaseRel.PODY: BaseRel.TPPI,
    BaseRel.PODZ: BaseRel.NTPPI,
    BaseRel.ECN: BaseRel.TPP,
    BaseRel.ECD: BaseRel.EQ,
    BaseRel.DC: BaseRel.NTPP,
}

_LEFT_DUAL = {
    BaseRel.EQ: BaseRel.ECD,
    BaseRel.TPP: BaseRel.PODY,
    BaseRel.TPPI: BaseRel.ECN,
    BaseRel.NTPP: BaseRel.PODZ,
    BaseRel.NTPPI: BaseRel.DC,
    BaseRel.PON: BaseRel.PON,
    BaseRel.PODY: BaseRel.TPP,
    BaseRel.PODZ: BaseRel.NTPP,
    BaseRel.ECN: BaseRel.TPPI,
    BaseRel.ECD: BaseRel.EQ,
    BaseRel.DC: BaseRel.NTPPI,
}

Side = Literal["right", "left"]


@dataclass(frozen=True)
class RelSet:
    """An immutable subset of the 11 base relations.

    Internally an 11-bit mask; externally it behaves like a set. All table
    arithmetic (composition cells, constraints, reports) is done on RelSets.
    """

    mask: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.mask < (1 << 11):
            raise ValueError(f"invalid RelSet mask {self.mask!r}")

    @classmethod
    def of(cls, *rels: BaseRel) -> "RelSet":
        mask = 0
        for r in rels:
            mask |= 1 << r
        return cls(mask)

    @classmethod
    def parse(cls, text: str) -> "RelSet":
        """Parse "TPP|NTPP" style notation (empty string = empty set)."""
        text = text.strip()
        if not text:
            return EMPTY
        return cls.of(*(BaseRel[token.strip()] for token in text.split("|")))

    def __contains__(self, rel: BaseRel) -> bool:
        return bool(self.mask >> rel & 1)

    def __iter__(self) -> Iterator[BaseRel]:
        return (r for r in ALL_RELS if self.mask >> r & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "RelSet") -> "RelSet":
        return RelSet(self.mask | other.mask)

    def __and__(self, other: "RelSet") -> "RelSet":
        return RelSet(self.mask & other.mask)

    def __sub__(self, other: "RelSet") -> "RelSet":
        return RelSet(self.mask & ~other.mask)

    def __le__(self, other: "RelSet") -> bool:
        return self.mask & ~other.mask == 0

    def map(self, f) -> "RelSet":
        return RelSet.of(*(f(r) for r in self))

    def __str__(self) -> str:
        return "|".join(r.name for r in self)

    def __repr__(self) -> str:
        return f"RelSet({str(self)!r})"


EMPTY = RelSet(0)
FULL = RelSet((1 << 11) - 1)


def converse(s: RelSet) -> RelSet:
    """Element-wise converse; an involution."""
    return s.map(lambda r: r.converse)


def dual(s: RelSet, side: Side) -> RelSet:
    """Element-wise right or left dual; applying the same side twice is the
    identity, and the two sides commute."""
    if side == "right":
        return s.map(lambda r: r.right_dual)
    if side == "left":
        return s.map(lambda r: r.left_dual)
    raise ValueError(f"side must be 'right' or 'left', got {side!r}")


# ---------------------------------------------------------------------------
# Coarser JEPD calculi over the same domain
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Calculus:
    """A JEPD partition of the 11 base relations into coarser blocks."""

    name: str
    partition: Mapping[str, RelSet]

    def __post_init__(self) -> None:
        union = EMPTY
        for block in self.partition.values():
            if union & block:
                raise ValueError(f"{self.name}: blocks are not disjoint")
            union = union | block
        if union != FULL:
            raise ValueError(f"{self.name}: blocks do not cover all 11 relations")

    def coarsen(self, rel: BaseRel) -> str:
        for label, block in self.partition.items():
            if rel in block:
                return label
        raise AssertionError("JEPD partition must cover every relation")

    def expand(self, label: str) -> RelSet:
        try:
            return self.partition[label]
        except KeyError:
            raise ValueError(f"unknown {self.name} label {label!r}") from None


def _rs(*rels: BaseRel) -> RelSet:
    return RelSet.of(*rels)


R = BaseRel

RCC11 = Calculus("RCC11", {r.name: _rs(r) for r in ALL_RELS})

RCC8 = Calculus("RCC8", {
    "EQ": _rs(R.EQ),
    "TPP": _rs(R.TPP),
    "TPPI": _rs(R.TPPI),
    "NTPP": _rs(R.NTPP),
    "NTPPI": _rs(R.NTPPI),
    "PO": _rs(R.PON, R.PODY, R.PODZ),
    "EC": _rs(R.ECN, R.ECD),
    "DC": _rs(R.DC),
})

RCC7 = Calculus("RCC7", {
    "EQ": _rs(R.EQ),
    "PP": _rs(R.TPP, R.NTPP),
    "PPI": _rs(R.TPPI, R.NTPPI),
    "PON": _rs(R.PON),
    "POD": _rs(R.PODY, R.PODZ),
    "ECD": _rs(R.ECD),
    "DN": _rs(R.ECN, R.DC),
})

RCC5 = Calculus("RCC5", {
    "EQ": _rs(R.EQ),
    "PP": _rs(R.TPP, R.NTPP),
    "PPI": _rs(R.TPPI, R.NTPPI),
    "PO": _rs(R.PON, R.PODY, R.PODZ),
    "DR": _rs(R.ECN, R.ECD, R.DC),
})

CALCULI: dict[str, Calculus] = {c.name: c for c in (RCC11, RCC8, RCC7, RCC5)}


def coarsen(rel: BaseRel, calculus: Calculus) -> str:
    return calculus.coarsen(rel)


def expand(label: str, calculus: Calculus) -> RelSet:
    return calculus.expand(label)


# ---------------------------------------------------------------------------
# Dual-generating-set reduction statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReductionStats:
    """Size of the table-derivation workload for a dual-closed calculus.

    s generator blocks split into one identity, m symmetric non-identity
    blocks and n non-symmetric blocks; T = s(s-1)/2 compositions determine
    the whole table, against r*r cells checked one by one.
    """

    calculus: str
    r: int
    s: int
    m: int
    n: int
    T: int
    ratio: Fraction


def block_converse(calculus: Calculus, label: str) -> str:
    """Converse acts blockwise on every calculus considered here."""
    img = converse(calculus.expand(label))
    for lbl, block in calculus.partition.items():
        if block == img:
            return lbl
    raise ValueError(f"{calculus.name}: converse of {label} is not a block")


def block_dual(calculus: Calculus, label: str, side: Side) -> str:
    """Blockwise dual; raises if the calculus is not closed under duals."""
    img = dual(calculus.expand(label), side)
    for lbl, block in calculus.partition.items():
        if block == img:
            return lbl
    raise ValueError(
        f"{calculus.name} is not a dual relation set: "
        f"{side} dual of {label} is not a block"
    )


def dual_generating_set(calculus: Calculus) -> list[str]:
    """One block per right-dual orbit, chosen so the result is closed under
    converse and contains the identity block."""
    labels = list(calculus.partition)
    chosen: list[str] = []
    seen: set[str] = set()
    for label in labels:
        if label in seen:
            continue
        partner = block_dual(calculus, label, "right")
        seen.update({label, partner})
        # Prefer the block containing the lowest-index base relation; for
        # every calculus here that selects {identity, parts, PON}-style
        # generators and keeps the set converse-closed.
        pick = min((label, partner), key=lambda l: min(calculus.partition[l]))
        chosen.append(pick)
    return chosen


def reduction_stats(calculus: Calculus) -> ReductionStats:
    """Workload counts for deriving the weak composition table of a
    dual-closed calculus from its dual generating set.

    Raises ValueError for calculi (RCC8, RCC5) that are not closed under
    the dual operations and therefore have no dual generating set.
    """
    gen = dual_generating_set(calculus)  # raises if not dual-closed
    identity = calculus.coarsen(BaseRel.EQ)
    sym = [l for l in gen if block_converse(calculus, l) == l and l != identity]
    asym = [l for l in gen if block_converse(calculus, l) != l]
    if any(block_converse(calculus, l) not in gen for l in gen):
        raise ValueError(f"{calculus.name}: generating set not converse-closed")
    r = len(calculus.partition)
    s, m, n = len(gen), len(sym), len(asym)
    T = s * (s - 1) // 2
    assert T == (m + n) * (m + n + 1) // 2
    return ReductionStats(calculus.name, r, s, m, n, T, Fraction(T, r * r))
