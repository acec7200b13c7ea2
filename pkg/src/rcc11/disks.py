"""The complemented closed disk domain: exact rational circle geometry.

Regions are closed disks and closed complements of disks in the rational
plane. Every geometric predicate reduces to exact integer sign tests on
the squared center distance against (ra+rb)^2 and (ra-rb)^2, so tangency
is an equality of rationals, never a tolerance: the classification must
separate boundary contact from overlap, which floating point cannot decide.

Two independent classification routes are provided and cross-checked by
the tests: the 9-intersection matrix route (compute the 3x3 emptiness
matrix from circle-pair predicates, look it up among the 11 canonical
matrices) and the direct topological-characterization route (point-set
clauses per relation). For a pair of circles the nine parts are just
inside/on/outside each circle; region polarity only permutes the rows and
columns of the circle-pair matrix.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Union

from .relations import BaseRel

R = BaseRel

RationalLike = Union[Fraction, int, str]


class Kind(enum.Enum):
    DISK = "disk"
    CODISK = "codisk"


def as_fraction(value: RationalLike) -> Fraction:
    """Exact rational from int, Fraction, or a "p/q" string."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    return Fraction(value)


@dataclass(frozen=True)
class DiskRegion:
    """A closed disk or the closure of the complement of an open disk.

    Region equality is parameter equality: in this domain two distinct
    parameter triples never denote the same point set.
    """

    kind: Kind
    cx: Fraction
    cy: Fraction
    radius: Fraction
    _ints: tuple[int, int, int, int] = field(
        init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "cx", as_fraction(self.cx))
        object.__setattr__(self, "cy", as_fraction(self.cy))
        object.__setattr__(self, "radius", as_fraction(self.radius))
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        q = self.cx.denominator
        q = q * self.cy.denominator // gcd(q, self.cy.denominator)
        q = q * self.radius.denominator // gcd(q, self.radius.denominator)
        ints = (int(self.cx * q), int(self.cy * q), int(self.radius * q), q)
        object.__setattr__(self, "_ints", ints)

    @classmethod
    def disk(cls, cx: RationalLike, cy: RationalLike, r: RationalLike) -> "DiskRegion":
        return cls(Kind.DISK, as_fraction(cx), as_fraction(cy), as_fraction(r))

    @classmethod
    def codisk(cls, cx: RationalLike, cy: RationalLike, r: RationalLike) -> "DiskRegion":
        return cls(Kind.CODISK, as_fraction(cx), as_fraction(cy), as_fraction(r))

    def complement(self) -> "DiskRegion":
        other = Kind.CODISK if self.kind is Kind.DISK else Kind.DISK
        return DiskRegion(other, self.cx, self.cy, self.radius)

    def __str__(self) -> str:
        return f"{self.kind.value}({self.cx},{self.cy};{self.radius})"


def complement(a: DiskRegion) -> DiskRegion:
    return a.complement()


def _pair_ints(a: DiskRegion, b: DiskRegion) -> tuple[int, int, int]:
    """(d^2, ra, rb) on a common integer scale, cleared of denominators."""
    xa, ya, ra, qa = a._ints
    xb, yb, rb, qb = b._ints
    g = gcd(qa, qb)
    fa, fb = qb // g, qa // g
    dx = xa * fa - xb * fb
    dy = ya * fa - yb * fb
    return dx * dx + dy * dy, ra * fa, rb * fb


def _gt(d2: int, alpha: int) -> bool:
    """d > alpha, where d = sqrt(d2) >= 0."""
    return True if alpha < 0 else d2 > alpha * alpha


def _lt(d2: int, alpha: int) -> bool:
    """d < alpha."""
    return False if alpha <= 0 else d2 < alpha * alpha


def _le(d2: int, alpha: int) -> bool:
    """d <= alpha."""
    return False if alpha < 0 else d2 <= alpha * alpha


# ---------------------------------------------------------------------------
# 9-intersection matrices
# ---------------------------------------------------------------------------

NineMatrix = tuple[tuple[int, int, int], ...]  # row/col order: interior, boundary, exterior


def _circle_matrix(d2: int, ra: int, rb: int) -> NineMatrix:
    """Emptiness pattern of inside/on/outside circle a against circle b."""
    in_in = _lt(d2, ra + rb)
    in_on = in_in and _gt(d2, rb - ra)
    in_out = _gt(d2, rb - ra)
    on_in = _lt(d2, ra + rb) and _gt(d2, ra - rb)
    on_on = d2 >= (ra - rb) ** 2 and d2 <= (ra + rb) ** 2
    on_out = _gt(d2, rb - ra)
    out_in = _gt(d2, ra - rb)
    out_on = _gt(d2, ra - rb)
    return (
        (int(in_in), int(in_on), int(in_out)),
        (int(on_in), int(on_on), int(on_out)),
        (int(out_in), int(out_on), 1),
    )


def nine_matrix(a: DiskRegion, b: DiskRegion) -> NineMatrix:
    """3x3 emptiness matrix of the parts of a against the parts of b.

    A codisk's interior is the outside of its circle and its exterior is
    the open disk, so polarity permutes rows/columns of the circle matrix.
    """
    base = _circle_matrix(*_pair_ints(a, b))
    rows = (0, 1, 2) if a.kind is Kind.DISK else (2, 1, 0)
    cols = (0, 1, 2) if b.kind is Kind.DISK else (2, 1, 0)
    return tuple(tuple(base[i][j] for j in cols) for i in rows)


def _m(rows: str) -> NineMatrix:
    return tuple(tuple(int(ch) for ch in row) for row in rows.split())


#: The canonical matrix of each relation.
CANONICAL_MATRICES: dict[BaseRel, NineMatrix] = {
    R.EQ: _m("100 010 001"),
    R.TPP: _m("100 110 111"),
    R.TPPI: _m("111 011 001"),
    R.NTPP: _m("100 100 111"),
    R.NTPPI: _m("111 001 001"),
    R.PON: _m("111 111 111"),
    R.PODY: _m("111 110 100"),
    R.PODZ: _m("111 100 100"),
    R.ECN: _m("001 011 111"),
    R.ECD: _m("001 010 100"),
    R.DC: _m("001 001 111"),
}

_MATRIX_TO_REL = {m: r for r, m in CANONICAL_MATRICES.items()}


def classify(a: DiskRegion, b: DiskRegion) -> BaseRel:
    """The unique relation whose canonical matrix the pair realizes."""
    m = nine_matrix(a, b)
    try:
        return _MATRIX_TO_REL[m]
    except KeyError:  # pragma: no cover - would be a classification defect
        raise AssertionError(f"matrix {m} of {a} vs {b} matches no relation")


# ---------------------------------------------------------------------------
# Topological-characterization route
# ---------------------------------------------------------------------------

def _subset(a: DiskRegion, b: DiskRegion, d2: int, ra: int, rb: int) -> bool:
    if a.kind is Kind.DISK and b.kind is Kind.DISK:
        return _le(d2, rb - ra)
    if a.kind is Kind.DISK and b.kind is Kind.CODISK:
        return not _lt(d2, ra + rb)
    if a.kind is Kind.CODISK and b.kind is Kind.DISK:
        return False  # unbounded inside bounded
    return _le(d2, ra - rb)


def clause_flags(a: DiskRegion, b: DiskRegion) -> dict[BaseRel, bool]:
    """All eleven topological clauses, evaluated independently."""
    d2, ra, rb = _pair_ints(a, b)
    ka, kb = a.kind, b.kind
    equal = a == b
    boundary_meet = (ra - rb) ** 2 <= d2 <= (ra + rb) ** 2

    if ka is Kind.DISK and kb is Kind.DISK:
        interiors = _lt(d2, ra + rb)
        union_plane = False
        intersects = _le(d2, ra + rb)
    elif ka is Kind.DISK and kb is Kind.CODISK:
        interiors = _gt(d2, rb - ra)
        union_plane = not _gt(d2, ra - rb)
        intersects = not _lt(d2, rb - ra)
    elif ka is Kind.CODISK and kb is Kind.DISK:
        interiors = _gt(d2, ra - rb)
        union_plane = not _gt(d2, rb - ra)
        intersects = not _lt(d2, ra - rb)
    else:
        interiors = True
        union_plane = not _lt(d2, ra + rb)
        intersects = True

    sub_ab = _subset(a, b, d2, ra, rb)
    sub_ba = _subset(b, a, d2, rb, ra)

    return {
        R.EQ: equal,
        R.TPP: sub_ab and not equal and boundary_meet,
        R.TPPI: sub_ba and not equal and boundary_meet,
        R.NTPP: sub_ab and not equal and not boundary_meet,
        R.NTPPI: sub_ba and not equal and not boundary_meet,
        R.PON: interiors and not sub_ab and not sub_ba and not union_plane,
        R.PODY: interiors and boundary_meet and union_plane,
        R.PODZ: interiors and not boundary_meet and union_plane,
        R.ECN: not interiors and intersects and not union_plane,
        R.ECD: not interiors and intersects and union_plane,
        R.DC: not intersects,
    }


def classify_by_clauses(a: DiskRegion, b: DiskRegion) -> BaseRel:
    flags = clause_flags(a, b)
    holders = [r for r, v in flags.items() if v]
    if len(holders) != 1:
        raise AssertionError(f"JEPD violated for {a} vs {b}: {holders}")
    return holders[0]


# ---------------------------------------------------------------------------
# Scene files
# ---------------------------------------------------------------------------

def parse_scene(text: str) -> list[tuple[str, DiskRegion]]:
    """JSON scene: {"regions": [{"id", "kind", "cx", "cy", "r"}, ...]}.

    Rational fields are integers or "p/q" strings. Region ids must be
    unique; order is preserved.
    """
    data = json.loads(text)
    out: list[tuple[str, DiskRegion]] = []
    seen: set[str] = set()
    for i, spec in enumerate(data["regions"]):
        try:
            rid = spec["id"]
            kind = Kind(spec["kind"])
            region = DiskRegion(kind, as_fraction(spec["cx"]),
                                as_fraction(spec["cy"]), as_fraction(spec["r"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"regions[{i}]: {exc}") from exc
        if rid in seen:
            raise ValueError(f"regions[{i}]: duplicate id {rid!r}")
        seen.add(rid)
        out.append((rid, region))
    return out


def scene_json(regions: Iterable[tuple[str, DiskRegion]]) -> str:
    def frac_str(f: Fraction):
        return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"

    payload = {"regions": [
        {"id": rid, "kind": reg.kind.value, "cx": frac_str(reg.cx),
         "cy": frac_str(reg.cy), "r": frac_str(reg.radius)}
        for rid, reg in regions
    ]}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
