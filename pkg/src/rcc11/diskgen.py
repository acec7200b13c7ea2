"""Constructive families, sampling, witnesses in the disk domain.

Everything here is exact: random choices pick rational parameters, every
tangency is solved as a rational equation, and every produced region pair
is verified by the classifier before being returned. Floating point never
decides anything.

The witness search powers the extensionality checks: given regions a, c
and a composition triad (Rrel, Srel), find b with a Rrel b and b Srel c.
The search combines per-relation parametric families anchored at a and at
c. When both sides demand a tangency, the two distance equations are
linear in the unknown radius once a rational unit direction is fixed, so
the candidate is solved directly; open-condition sides are sampled. Every
candidate is verified exactly, and failures just advance the seeded RNG.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .disks import DiskRegion, Kind, classify
from .relations import BaseRel

R = BaseRel

F = Fraction


# ---------------------------------------------------------------------------
# Rational sampling helpers
# ---------------------------------------------------------------------------

def _rational(rng: random.Random, span: int = 12, den: int = 4) -> Fraction:
    return F(rng.randint(-span * den, span * den), den)


def _positive(rng: random.Random, span: int = 8, den: int = 4) -> Fraction:
    return F(rng.randint(1, span * den), den)


def _unit(rng: random.Random) -> tuple[Fraction, Fraction]:
    """A random rational point on the unit circle (Pythagorean triples plus
    the axes), optionally reflected."""
    roll = rng.randrange(6)
    if roll == 0:
        u = (F(1), F(0))
    elif roll == 1:
        u = (F(0), F(1))
    else:
        m = rng.randint(2, 12)
        n = rng.randint(1, m - 1)
        h = m * m + n * n
        u = (F(m * m - n * n, h), F(2 * m * n, h))
    x, y = u
    if rng.random() < 0.5:
        x = -x
    if rng.random() < 0.5:
        y = -y
    if rng.random() < 0.5:
        x, y = y, x
    return x, y


def _unit_from_tau(tau: Fraction) -> tuple[Fraction, Fraction]:
    """Exact unit vector from the half-angle parameter."""
    den = 1 + tau * tau
    return (1 - tau * tau) / den, 2 * tau / den


def _unit_roughly_towards(wx: Fraction, wy: Fraction) -> Iterator[tuple[Fraction, Fraction]]:
    """Exact rational unit vectors approximating the direction of (wx, wy),
    increasingly precise. Floats only steer the choice; the outputs are
    exactly unit length and all decisions on them stay exact."""
    angle = math.atan2(float(wy), float(wx))
    tau = math.tan(angle / 2)
    for den in (16, 64, 256, 4096, 1 << 16, 1 << 24):
        if abs(tau) < 1e18:
            yield _unit_from_tau(F(tau).limit_denominator(den))
    yield (F(-1), F(0))  # tau blows up only pointing along -x


def _rational_sqrt(f: Fraction) -> Optional[Fraction]:
    if f < 0:
        return None
    rn, rd = math.isqrt(f.numerator), math.isqrt(f.denominator)
    if rn * rn == f.numerator and rd * rd == f.denominator:
        return F(rn, rd)
    return None


def _dir_sampler(wx: Fraction, wy: Fraction,
                 exact: tuple[tuple[Fraction, Fraction], ...] = ()):
    """Random unit-vector source mixing uniform directions with directions
    jittered around +-(wx, wy); witness placement usually wants to head
    straight at or away from the other anchor. ``exact`` carries perfectly
    collinear unit vectors (available when |w| is rational); degenerate
    tangency configurations confine the witness center to that line, so
    approximations never suffice there."""
    base: list[Optional[Fraction]] = []
    if wx or wy:
        angle = math.atan2(float(wy), float(wx))
        for ang in (angle, angle + math.pi):
            t = math.tan(ang / 2)
            base.append(F(t).limit_denominator(4096) if abs(t) < 1e12 else None)

    def sample(rng: random.Random) -> tuple[Fraction, Fraction]:
        if exact and rng.random() < 0.3:
            return exact[rng.randrange(len(exact))]
        if not base or rng.random() < 0.34:
            return _unit(rng)
        t = base[rng.randrange(len(base))]
        if t is None:
            return (F(-1), F(0))
        den = 1024 if rng.random() < 0.5 else 1 << 16
        jitter = F(rng.randint(-48, 48), den) * (1 + abs(t))
        return _unit_from_tau(t + jitter)

    return sample


# ---------------------------------------------------------------------------
# Per-relation constructive families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Family:
    """How to place b = (kind, anchor.center + t*u, rb) so that
    classify(anchor, b) = rel.

    Tangent families fix t = ea*r_anchor + fb*rb exactly; open families
    sample t from the stated range. rb_mode constrains rb against the
    anchor radius.
    """

    kind: Kind
    mode: str  # "tangent" | "inside" | "outside" | "cross"
    ea: int = 0
    fb: int = 0
    rb_mode: str = "any"  # "any" | "smaller" | "bigger"

    @property
    def is_tangent(self) -> bool:
        return self.mode == "tangent"


_D, _K = Kind.DISK, Kind.CODISK

# families[anchor_kind][relation] -> tuple of Family
# "inside": 0 <= t < |ea*ra + fb*rb|; "outside": t > ra + rb;
# "cross": |ra - rb| < t < ra + rb.
_FAMILIES: dict[Kind, dict[BaseRel, tuple[Family, ...]]] = {
    _D: {
        R.TPP: (Family(_D, "tangent", -1, 1, "bigger"),
                Family(_K, "tangent", 1, 1)),
        R.TPPI: (Family(_D, "tangent", 1, -1, "smaller"),),
        R.NTPP: (Family(_D, "inside", -1, 1, "bigger"),
                 Family(_K, "outside")),
        R.NTPPI: (Family(_D, "inside", 1, -1, "smaller"),),
        R.PON: (Family(_D, "cross"), Family(_K, "cross")),
        R.PODY: (Family(_K, "tangent", 1, -1, "smaller"),),
        R.PODZ: (Family(_K, "inside", 1, -1, "smaller"),),
        R.ECN: (Family(_D, "tangent", 1, 1),
                Family(_K, "tangent", -1, 1, "bigger")),
        R.DC: (Family(_D, "outside"),
               Family(_K, "inside", -1, 1, "bigger")),
    },
    _K: {
        R.TPP: (Family(_K, "tangent", 1, -1, "smaller"),),
        R.TPPI: (Family(_D, "tangent", 1, 1),
                 Family(_K, "tangent", -1, 1, "bigger")),
        R.NTPP: (Family(_K, "inside", 1, -1, "smaller"),),
        R.NTPPI: (Family(_D, "outside"),
                  Family(_K, "inside", -1, 1, "bigger")),
        R.PON: (Family(_D, "cross"), Family(_K, "cross")),
        R.PODY: (Family(_D, "tangent", -1, 1, "bigger"),
                 Family(_K, "tangent", 1, 1)),
        R.PODZ: (Family(_D, "inside", -1, 1, "bigger"),
                 Family(_K, "outside")),
        R.ECN: (Family(_D, "tangent", 1, -1, "smaller"),),
        R.DC: (Family(_D, "inside", 1, -1, "smaller"),),
    },
}


def families(anchor: DiskRegion, rel: BaseRel) -> tuple[Family, ...]:
    if rel in (R.EQ, R.ECD):
        raise ValueError("EQ and ECD are functional, not families")
    return _FAMILIES[anchor.kind][rel]


Spread = tuple[int, int]

_GEN_SPREAD: Spread = (-4, 3)      # generation: keeps slack bounded away from 0
_WITNESS_SPREAD: Spread = (-12, 4)  # search: reaches far below any generated slack


def _sample_rb(rng: random.Random, ra: Fraction, mode: str,
               scale: Optional[Fraction] = None,
               spread: Spread = _GEN_SPREAD) -> Fraction:
    s = scale if scale is not None else ra
    lo, hi = spread
    step = F(rng.randint(1, 8), 8)
    if mode == "smaller":
        return ra * _edge_fraction(rng, max(1, -lo))
    if mode == "bigger":
        return ra + s * F(2) ** rng.randint(lo, hi) * step
    return s * F(2) ** rng.randint(lo, hi) * step


def _edge_fraction(rng: random.Random, fine_k: int) -> Fraction:
    """A fraction of (0, 1): a coarse grid value, or one approaching either
    end geometrically (the open-condition windows in near-degenerate
    configurations hug the constraint boundaries)."""
    if fine_k <= 1 or rng.random() < 0.4:
        return F(rng.randint(1, 15), 16)
    eps = F(rng.randint(1, 8), 8) * F(2) ** -rng.randint(1, fine_k)
    return eps if rng.random() < 0.5 else 1 - eps


def _sample_family(anchor: DiskRegion, fam: Family, rng: random.Random,
                   scale: Optional[Fraction] = None,
                   unit_fn=None, spread: Spread = _GEN_SPREAD) -> DiskRegion:
    ra = anchor.radius
    rb = _sample_rb(rng, ra, fam.rb_mode, scale, spread)
    fine_k = max(1, -spread[0])
    if fam.mode == "tangent":
        t = fam.ea * ra + fam.fb * rb
    elif fam.mode == "inside":
        bound = abs(fam.ea * ra + fam.fb * rb)
        t = 0 if rng.random() < F(1, 16) else bound * _edge_fraction(rng, fine_k)
    elif fam.mode == "outside":
        t = (ra + rb) * (1 + _edge_fraction(rng, fine_k))
    elif fam.mode == "cross":
        lo, hi = abs(ra - rb), ra + rb
        t = lo + (hi - lo) * _edge_fraction(rng, fine_k)
    else:  # pragma: no cover
        raise AssertionError(fam.mode)
    ux, uy = unit_fn(rng) if unit_fn is not None else _unit(rng)
    return DiskRegion(fam.kind, anchor.cx + t * ux, anchor.cy + t * uy, rb)


def random_region(rng: random.Random) -> DiskRegion:
    kind = _D if rng.random() < 0.5 else _K
    return DiskRegion(kind, _rational(rng), _rational(rng), _positive(rng))


def realize_second(anchor: DiskRegion, rel: BaseRel,
                   rng: random.Random, max_tries: int = 64) -> DiskRegion:
    """A region b with classify(anchor, b) = rel, verified exactly."""
    if rel is R.EQ:
        return anchor
    if rel is R.ECD:
        return anchor.complement()
    fams = families(anchor, rel)
    for _ in range(max_tries):
        b = _sample_family(anchor, rng.choice(fams), rng)
        if classify(anchor, b) is rel:
            return b
    raise RuntimeError(f"could not realize {rel.name} from {anchor}")


def generate_pair(rel: BaseRel, seed: int) -> tuple[DiskRegion, DiskRegion]:
    """A pair classified as rel; deterministic for a fixed seed."""
    rng = random.Random(f"pair:{rel.name}:{seed}")
    a = random_region(rng)
    b = realize_second(a, rel, rng)
    assert classify(a, b) is rel
    return a, b


# ---------------------------------------------------------------------------
# Brute-force composition observation
# ---------------------------------------------------------------------------

def observe_cell(rel1: BaseRel, rel2: BaseRel, trials: int,
                 seed: int) -> tuple[set[BaseRel], int]:
    """Sample triples a rel1 b rel2 c with the middle region shared and
    collect the observed relations between a and c. Returns the observed
    set and the count of failed draws (skipped)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(f"observe:{rel1.name}:{rel2.name}:{seed}")
    observed: set[BaseRel] = set()
    failures = 0
    for _ in range(trials):
        try:
            a = random_region(rng)
            b = realize_second(a, rel1, rng)
            c = realize_second(b, rel2, rng)
        except RuntimeError:
            failures += 1
            continue
        observed.add(classify(a, c))
    if failures == trials:
        raise RuntimeError(f"all {trials} draws failed for "
                           f"{rel1.name},{rel2.name}")
    return observed, failures


# ---------------------------------------------------------------------------
# Witness search
# ---------------------------------------------------------------------------

def _dot(ax: Fraction, ay: Fraction, bx: Fraction, by: Fraction) -> Fraction:
    return ax * bx + ay * by


def _solve_double_tangency(a: DiskRegion, fam_a: Family, c: DiskRegion,
                           fam_c: Family, u: tuple[Fraction, Fraction],
                           rng: random.Random) -> Optional[DiskRegion]:
    """b tangent-constrained to both anchors: with b's center at
    a.center + t_a * u, the two distance equations |b - a| = ea*ra + fa*rb
    and |b - c| = ec*rc + fc*rb are linear in rb because fa, fc = +-1.

    The linear equation can degenerate to 0 = 0 (a segment of solutions,
    e.g. nested tangencies along the center line); then rb is free and is
    sampled instead.
    """
    e_r = fam_a.ea * a.radius
    f_r = fam_a.fb
    e_s = fam_c.ea * c.radius
    f_s = fam_c.fb
    wx, wy = a.cx - c.cx, a.cy - c.cy
    ux, uy = u
    wu = _dot(wx, wy, ux, uy)
    w2 = _dot(wx, wy, wx, wy)
    denom = 2 * f_r * wu + 2 * (e_r * f_r - e_s * f_s)
    numer = -(w2 + 2 * e_r * wu + e_r * e_r - e_s * e_s)
    if denom == 0:
        if numer != 0:
            return None
        rb = (a.radius + c.radius) * _edge_fraction(rng, 12)
    else:
        rb = numer / denom
    if rb <= 0:
        return None
    t = e_r + f_r * rb
    if t < 0:
        return None
    return DiskRegion(fam_a.kind, a.cx + t * ux, a.cy + t * uy, rb)


def find_witness(rel1: BaseRel, rel2: BaseRel, a: DiskRegion, c: DiskRegion,
                 seed: int = 0, budget: int = 10_000) -> Optional[DiskRegion]:
    """b with classify(a, b) = rel1 and classify(b, c) = rel2, or None if
    the candidate budget is exhausted (a defect when the relation of a and
    c is a table entry of the cell, since the domain is extensional)."""
    # functional relations pin b outright
    if rel1 is R.EQ:
        return a if classify(a, c) is rel2 else None
    if rel2 is R.EQ:
        return c if classify(a, c) is rel1 else None
    if rel1 is R.ECD:
        b = a.complement()
        return b if classify(b, c) is rel2 else None
    if rel2 is R.ECD:
        b = c.complement()
        return b if classify(a, b) is rel1 else None

    fams_a = families(a, rel1)
    fams_c = families(c, rel2.converse)
    combos = [(fa, fc) for fa in fams_a for fc in fams_c if fa.kind == fc.kind]
    if not combos:
        return None
    rng = random.Random(f"witness:{rel1.name}:{rel2.name}:{seed}:{a}:{c}")
    wx, wy = c.cx - a.cx, c.cy - a.cy
    scale = a.radius + c.radius + abs(wx) + abs(wy) + 1
    dist = _rational_sqrt(wx * wx + wy * wy)
    exact = ((wx / dist, wy / dist), (-wx / dist, -wy / dist)) if dist else ()
    dir_a = _dir_sampler(wx, wy, exact)  # anchored at a, toward/away from c
    dir_c = _dir_sampler(-wx, -wy, exact)
    for trial in range(budget):
        fam_a, fam_c = combos[trial % len(combos)] if trial < len(combos) \
            else rng.choice(combos)
        if fam_a.is_tangent and fam_c.is_tangent:
            b = _solve_double_tangency(a, fam_a, c, fam_c, dir_a(rng), rng)
        elif fam_c.is_tangent and not fam_a.is_tangent:
            b = _sample_family(c, fam_c, rng, scale, dir_c, _WITNESS_SPREAD)
        elif fam_a.is_tangent or trial % 2 == 0:
            b = _sample_family(a, fam_a, rng, scale, dir_a, _WITNESS_SPREAD)
        else:
            b = _sample_family(c, fam_c, rng, scale, dir_c, _WITNESS_SPREAD)
        if b is None:
            continue
        if classify(a, b) is rel1 and classify(b, c) is rel2:
            return b
    return None


# ---------------------------------------------------------------------------
# Interpolation between non-tangential parts
# ---------------------------------------------------------------------------

Mode = str  # "ntpp-ntpp" | "tpp-ntpp" | "ntpp-tpp"


def interpolate(a: DiskRegion, c: DiskRegion, mode: Mode) -> DiskRegion:
    """b splitting a NTPP c as requested: a NTPP b NTPP c, a TPP b NTPP c,
    or a NTPP b TPP c. Constructions shrink a rational offset until the
    exact classifier accepts, so the result is always verified."""
    if classify(a, c) is not R.NTPP:
        raise ValueError("interpolate requires a NTPP c")
    first, second = {
        "ntpp-ntpp": (R.NTPP, R.NTPP),
        "tpp-ntpp": (R.TPP, R.NTPP),
        "ntpp-tpp": (R.NTPP, R.TPP),
    }[mode]

    ka, kc = a.kind, c.kind
    u = (F(1), F(0))

    def candidates() -> Iterator[DiskRegion]:
        if mode == "ntpp-tpp" and (ka, kc) == (_D, _K):
            # b is a disk externally tangent to c's circle and big enough
            # to swallow a; works once its center direction from c points
            # close enough at a and the radius is large.
            wx, wy = a.cx - c.cx, a.cy - c.cy
            for ux, uy in _unit_roughly_towards(wx, wy):
                rb = a.radius + c.radius
                for _ in range(80):
                    t = rb + c.radius
                    yield DiskRegion(_D, c.cx + t * ux, c.cy + t * uy, rb)
                    rb *= 2
            return
        delta0 = {
            (_D, _D): (c.radius - a.radius) / 2,
            (_K, _K): (a.radius - c.radius) / 2,
            (_D, _K): a.radius,
        }[(ka, kc)]
        delta = delta0
        for _ in range(128):
            if mode == "ntpp-ntpp":
                if (ka, kc) == (_D, _D):
                    yield DiskRegion(_D, a.cx, a.cy, a.radius + delta)
                elif (ka, kc) == (_K, _K):
                    yield DiskRegion(_K, a.cx, a.cy, a.radius - delta)
                else:
                    yield DiskRegion(_D, a.cx, a.cy, a.radius + delta)
            elif mode == "tpp-ntpp":
                # tangent to a from outside: center offset equals radius gain
                if (ka, kc) == (_K, _K):
                    yield DiskRegion(_K, a.cx + delta * u[0], a.cy,
                                     a.radius - delta)
                else:
                    yield DiskRegion(_D, a.cx + delta * u[0], a.cy,
                                     a.radius + delta)
            else:  # ntpp-tpp, tangent to c from inside
                if (ka, kc) == (_D, _D):
                    yield DiskRegion(_D, c.cx + delta * u[0], c.cy,
                                     c.radius - delta)
                else:  # (_K, _K)
                    yield DiskRegion(_K, c.cx + delta * u[0], c.cy,
                                     c.radius + delta)
            delta /= 2

    for b in candidates():
        try:
            if classify(a, b) is first and classify(b, c) is second:
                return b
        except ValueError:  # nonpositive radius candidate
            pass
    raise AssertionError(f"interpolation failed for {a} {mode} {c}")
