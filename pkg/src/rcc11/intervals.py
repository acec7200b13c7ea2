"""Regular-closed finite unions of closed intervals and rays on the line.

The 1-D domain hosting the hole-relation chain constructions: regions are
canonical unions of closed intervals [l, r] (l may be -oo, r may be +oo),
pairwise separated by positive gaps. Contact is Whiteheadean (nonempty
intersection of the closed sets), parthood is inclusion, and complement,
meet and join are the regular-closed Boolean operations, so the 11-way
classification runs off the same lattice characterizations used by the
dyadic model.

The chain here realizes the 1-D construction b_0 = (-oo, 0], b_i = [i-1, i]:
alternating unions c_i whose adjacent pairs (and the pairs (c_1, c_2j)) are
strict holes. A strict hole strictly enlarges the finite endpoint set,
which is the counting certificate that bounds how far a hole chain from a
fixed pair can extend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .relations import BaseRel

R = BaseRel

Endpoint = Union[Fraction, float]  # Fractions plus the two infinity markers

NEG_INF = -math.inf
POS_INF = math.inf


def _is_finite(x: Endpoint) -> bool:
    return isinstance(x, Fraction)


@dataclass(frozen=True)
class IntervalRegion:
    """Canonical nonempty proper regular-closed subset of the line."""

    components: tuple[tuple[Endpoint, Endpoint], ...]

    def __post_init__(self) -> None:
        comps = self.components
        if not comps:
            raise ValueError("empty region")
        prev_hi = None
        for lo, hi in comps:
            if not (lo < hi):
                raise ValueError(f"degenerate component [{lo}, {hi}]")
            if prev_hi is not None and not (prev_hi < lo):
                raise ValueError("components must be sorted with positive gaps")
            prev_hi = hi
        if comps[0][0] == NEG_INF and comps[-1][1] == POS_INF and len(comps) == 1:
            raise ValueError("the full line is not a region")

    def boundary(self) -> tuple[Fraction, ...]:
        pts: list[Fraction] = []
        for lo, hi in self.components:
            if _is_finite(lo):
                pts.append(lo)
            if _is_finite(hi):
                pts.append(hi)
        return tuple(sorted(pts))

    def __str__(self) -> str:
        return format_interval_region(self)


def regularize(raw: Iterable[Sequence[Endpoint]]) -> IntervalRegion:
    """Canonical form: sort, merge touching or overlapping intervals, drop
    degenerate ones. Rejects an empty or full-line result."""
    items: list[tuple[Endpoint, Endpoint]] = []
    for lo, hi in raw:
        lo = lo if lo == NEG_INF else Fraction(lo)
        hi = hi if hi == POS_INF else Fraction(hi)
        if lo == NEG_INF and hi == POS_INF:
            raise ValueError("the full line is not a region")
        if lo < hi:
            items.append((lo, hi))
    if not items:
        raise ValueError("no interval of positive length")
    items.sort()  # Fraction/inf comparisons are exact
    merged = [items[0]]
    for lo, hi in items[1:]:
        mlo, mhi = merged[-1]
        if lo <= mhi:  # touching intervals fuse into one regular closed set
            merged[-1] = (mlo, max(mhi, hi))
        else:
            merged.append((lo, hi))
    return IntervalRegion(tuple(merged))


def _components(region: IntervalRegion) -> tuple[tuple[Endpoint, Endpoint], ...]:
    return region.components


def complement(region: IntervalRegion) -> IntervalRegion:
    """Regular-closed complement: closure of the set complement."""
    comps = region.components
    out: list[tuple[Endpoint, Endpoint]] = []
    cursor: Endpoint = NEG_INF
    for lo, hi in comps:
        if cursor < lo:
            out.append((cursor, lo))
        cursor = hi
    if cursor < POS_INF:
        out.append((cursor, POS_INF))
    return IntervalRegion(tuple(out))


def join(a: IntervalRegion, b: IntervalRegion) -> IntervalRegion:
    return regularize(list(a.components) + list(b.components))


def _intersect_raw(a: IntervalRegion, b: IntervalRegion,
                   *, strict: bool) -> list[tuple[Endpoint, Endpoint]]:
    """Pairwise component intersections; strict drops point touchings,
    giving the regular-closed meet."""
    out = []
    for alo, ahi in a.components:
        for blo, bhi in b.components:
            lo, hi = max(alo, blo), min(ahi, bhi)
            if lo < hi or (not strict and lo == hi):
                out.append((lo, hi))
    return out


def contact(a: IntervalRegion, b: IntervalRegion) -> bool:
    """Whiteheadean contact: the closed point sets intersect."""
    return bool(_intersect_raw(a, b, strict=False))


def interiors_meet(a: IntervalRegion, b: IntervalRegion) -> bool:
    """Equivalently: the regular-closed meet is nonzero."""
    return bool(_intersect_raw(a, b, strict=True))


def subset(a: IntervalRegion, b: IntervalRegion) -> bool:
    return all(
        any(blo <= alo and ahi <= bhi for blo, bhi in b.components)
        for alo, ahi in a.components
    )


def classify11(a: IntervalRegion, b: IntervalRegion) -> BaseRel:
    """JEPD classification; all clauses are evaluated and exactly one must
    hold, which doubles as an internal consistency assertion."""
    flags = clause_flags(a, b)
    holders = [r for r, v in flags.items() if v]
    if len(holders) != 1:
        raise AssertionError(f"JEPD violated for {a} vs {b}: {holders}")
    return holders[0]


def clause_flags(a: IntervalRegion, b: IntervalRegion) -> dict[BaseRel, bool]:
    ca, cb = complement(a), complement(b)
    eq = a == b
    sub_ab = subset(a, b) and not eq
    sub_ba = subset(b, a) and not eq
    ecd = a == cb
    sub_cb_a = subset(cb, a) and not ecd
    return {
        R.EQ: eq,
        R.TPP: sub_ab and contact(a, cb),
        R.NTPP: sub_ab and not contact(a, cb),
        R.TPPI: sub_ba and contact(b, ca),
        R.NTPPI: sub_ba and not contact(b, ca),
        R.PON: (interiors_meet(a, b) and not subset(a, b) and not subset(b, a)
                and interiors_meet(ca, cb)),
        R.PODY: sub_cb_a and contact(ca, cb),
        R.PODZ: sub_cb_a and not contact(ca, cb),
        R.ECN: subset(a, cb) and not ecd and contact(a, b),
        R.ECD: ecd,
        R.DC: not contact(a, b),
    }


def strict_hole(a: IntervalRegion, b: IntervalRegion) -> bool:
    """a is a non-trivial hole of b: externally connected, a non-tangential
    proper part of the regular-closed join, and not b's exact complement.
    A join equal to the whole line (in particular b = a') is never a hole."""
    if interiors_meet(a, b) or not contact(a, b):
        return False  # not externally connected
    try:
        j = join(a, b)
    except ValueError:  # join is the full line
        return False
    if not (subset(a, j) and a != j):
        return False
    if contact(a, complement(j)):
        return False  # only a tangential part of the union
    return b != complement(a)


def boundary_count(a: IntervalRegion) -> int:
    """Number of finite endpoints of the canonical components."""
    return len(a.boundary())


# ---------------------------------------------------------------------------
# Hole chains
# ---------------------------------------------------------------------------

def _piece(i: int) -> tuple[Endpoint, Endpoint]:
    """b_0 = (-oo, 0]; b_i = [i-1, i] for i >= 1."""
    if i == 0:
        return (NEG_INF, Fraction(0))
    return (Fraction(i - 1), Fraction(i))


def build_hole_chain(k: int) -> list[IntervalRegion]:
    """The alternating chain c_1 .. c_{2k+1}: odd c collects the odd unit
    pieces, even c the left ray plus the even pieces. Every adjacent pair
    is a strict hole, as is (c_1, c_2j) for each j <= k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    chain = []
    for idx in range(1, 2 * k + 2):
        if idx % 2:
            pieces = [_piece(i) for i in range(1, idx + 1, 2)]
        else:
            pieces = [_piece(i) for i in range(0, idx + 1, 2)]
        chain.append(regularize(pieces))
    return chain


def hole_chain_paths(k: int) -> dict[int, list[IntervalRegion]]:
    """Explicit witnesses that (c_1, c_2k) lies in the (2i-1)-fold hole
    power for every i <= k: a path of odd length 2i-1 from c_1 to c_{2k},
    taking the shortcut c_1 -> c_{2(k-i)+2} first and then climbing."""
    chain = build_hole_chain(k)
    target = 2 * k  # index of c_{2k} (1-based)
    paths: dict[int, list[IntervalRegion]] = {}
    for i in range(1, k + 1):
        start = 2 * (k - i) + 2
        path = [chain[0], chain[start - 1]]
        while start < target:
            start += 1
            path.append(chain[start - 1])
        assert len(path) - 1 == 2 * i - 1
        paths[2 * i - 1] = path
    return paths


# ---------------------------------------------------------------------------
# Literals: [l,r], (-inf,r], [l,inf), joined by +
# ---------------------------------------------------------------------------

def parse_interval_region(text: str) -> IntervalRegion:
    raw = []
    for term in text.split("+"):
        term = term.strip()
        if term.startswith("(-inf,") and term.endswith("]"):
            raw.append((NEG_INF, Fraction(term[6:-1])))
        elif term.startswith("[") and term.endswith(",inf)"):
            raw.append((Fraction(term[1:-5]), POS_INF))
        elif term.startswith("[") and term.endswith("]"):
            lo, hi = term[1:-1].split(",")
            raw.append((Fraction(lo), Fraction(hi)))
        else:
            raise ValueError(f"bad interval term {term!r}")
    return regularize(raw)


def format_interval_region(region: IntervalRegion) -> str:
    parts = []
    for lo, hi in region.components:
        if lo == NEG_INF:
            parts.append(f"(-inf,{hi}]")
        elif hi == POS_INF:
            parts.append(f"[{lo},inf)")
        else:
            parts.append(f"[{lo},{hi}]")
    return "+".join(parts)
