import itertools
import random
from fractions import Fraction

import pytest

from rcc11 import intervals as iv
from rcc11.relations import BaseRel

R = BaseRel
F = Fraction


def reg(*pairs):
    return iv.regularize(pairs)


def test_regularize_examples():
    assert reg((0, 1), (1, 2)).components == ((F(0), F(2)),)
    assert len(reg((0, 1), (2, 3)).components) == 2
    assert reg((iv.NEG_INF, 0), (0, 1)).components == ((iv.NEG_INF, F(1)),)
    assert reg((0, 1), (1, 1)).components == ((F(0), F(1)),)  # degenerate dropped
    assert iv.regularize([(0, 2), (1, 3)]).components == ((F(0), F(3)),)


def test_regularize_rejects_empty_and_full():
    with pytest.raises(ValueError):
        iv.regularize([(1, 1)])
    with pytest.raises(ValueError):
        iv.regularize([])
    with pytest.raises(ValueError):
        iv.regularize([(iv.NEG_INF, iv.POS_INF)])
    with pytest.raises(ValueError):
        reg((iv.NEG_INF, 0), (0, iv.POS_INF))  # merges to the full line


def test_regularize_idempotent():
    r = reg((0, 1), (3, 4))
    assert iv.regularize(r.components) == r


def test_complement():
    r = reg((0, 1))
    c = iv.complement(r)
    assert c.components == ((iv.NEG_INF, F(0)), (F(1), iv.POS_INF))
    assert iv.complement(c) == r
    ray = reg((iv.NEG_INF, 0))
    assert iv.complement(ray).components == ((F(0), iv.POS_INF),)


def test_classify_examples():
    assert iv.classify11(reg((0, 1)), reg((1, 2))) is R.ECN
    assert iv.classify11(reg((0, 1)), iv.complement(reg((0, 1)))) is R.ECD
    assert iv.classify11(reg((1, 2)), reg((0, 3))) is R.NTPP
    assert iv.classify11(reg((0, 2)), reg((1, 3))) is R.PON
    assert iv.classify11(reg((0, 1)), reg((0, 2))) is R.TPP
    assert iv.classify11(reg((0, 3)), reg((1, 2))) is R.NTPPI
    assert iv.classify11(reg((0, 1)), reg((5, 6))) is R.DC
    assert iv.classify11(reg((0, 1)), reg((0, 1))) is R.EQ
    # PODY: complement of [1,2] inside [0,3]... boundaries touch
    a = iv.complement(reg((1, 2)))
    b = reg((1, 4))
    assert iv.classify11(a, b) is R.PODY
    # PODZ: complement of [1,2] against [0,3]
    assert iv.classify11(a, reg((0, 3))) is R.PODZ


def _random_region(rng):
    pts = sorted(rng.sample(range(-8, 9), rng.randrange(2, 7)))
    pairs = []
    if rng.random() < 0.25:
        pairs.append((iv.NEG_INF, F(pts.pop(0))))
    while len(pts) >= 2:
        lo = pts.pop(0)
        hi = pts.pop(0)
        pairs.append((F(lo), F(hi)))
    if pts and rng.random() < 0.25:
        pairs.append((F(pts.pop()), iv.POS_INF))
    try:
        return iv.regularize(pairs)
    except ValueError:
        return reg((0, 1))


def test_jepd_and_converse_sampled():
    rng = random.Random(5)
    conv = {R.TPP: R.TPPI, R.TPPI: R.TPP, R.NTPP: R.NTPPI, R.NTPPI: R.NTPP}
    for _ in range(500):
        a, b = _random_region(rng), _random_region(rng)
        flags = iv.clause_flags(a, b)
        holders = [r for r, v in flags.items() if v]
        assert len(holders) == 1, (str(a), str(b), holders)
        r = holders[0]
        assert iv.classify11(b, a) is conv.get(r, r)


def test_strict_hole_examples():
    a = reg((0, 1))
    b = reg((iv.NEG_INF, 0), (1, 2))
    assert iv.strict_hole(a, b)
    assert not iv.strict_hole(a, iv.complement(a))  # trivial hole excluded
    assert not iv.strict_hole(a, reg((2, 3)))       # not in contact


def test_boundary_count():
    assert iv.boundary_count(reg((0, 1))) == 2
    assert iv.boundary_count(reg((iv.NEG_INF, 0))) == 1
    assert iv.boundary_count(reg((iv.NEG_INF, 0), (1, 2))) == 3


def test_build_hole_chain_k1():
    c1, c2, c3 = iv.build_hole_chain(1)
    assert str(c1) == "[0,1]"
    assert str(c2) == "(-inf,0]+[1,2]"
    assert str(c3) == "[0,1]+[2,3]"
    assert iv.strict_hole(c1, c2)
    assert iv.strict_hole(c2, c3)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_hole_chain_properties(k):
    chain = iv.build_hole_chain(k)
    assert len(chain) == 2 * k + 1
    for a, b in zip(chain, chain[1:]):
        assert iv.strict_hole(a, b)
    for j in range(1, k + 1):
        assert iv.strict_hole(chain[0], chain[2 * j - 1])
    assert iv.boundary_count(chain[0]) == 2
    assert iv.boundary_count(chain[2 * k - 1]) == 2 * k + 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_hole_chain_explicit_power_membership(k):
    paths = iv.hole_chain_paths(k)
    chain = iv.build_hole_chain(k)
    assert set(paths) == {2 * i - 1 for i in range(1, k + 1)}
    for length, path in paths.items():
        assert len(path) - 1 == length
        assert path[0] == chain[0] and path[-1] == chain[2 * k - 1]
        for a, b in zip(path, path[1:]):
            assert iv.strict_hole(a, b)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_chain_extension_blocked_by_endpoint_count(k):
    # a (2k+1)-step strict-hole chain adds at least one endpoint per step,
    # so it needs an endpoint gap of at least 2k+1; the constructed pair
    # (c_1, c_2k) has gap 2k-1 and therefore cannot extend.
    chain = iv.build_hole_chain(k)
    gap = iv.boundary_count(chain[2 * k - 1]) - iv.boundary_count(chain[0])
    assert gap == 2 * k - 1 < 2 * k + 1


def test_boundary_inclusion_law_on_generated_pairs():
    # strict_hole(a, b) implies endpoints(a) is a proper subset of
    # endpoints(b), checked over random pairs plus the chain pairs.
    rng = random.Random(9)
    found = 0
    pool = [(_random_region(rng), _random_region(rng)) for _ in range(4000)]
    for k in (1, 2, 3):
        chain = iv.build_hole_chain(k)
        pool.extend(zip(chain, chain[1:]))
        pool.extend((chain[0], chain[2 * j - 1]) for j in range(1, k + 1))
    for a, b in pool:
        if iv.strict_hole(a, b):
            found += 1
            ea, eb = set(a.boundary()), set(b.boundary())
            assert ea < eb, (str(a), str(b))
    assert found >= 10


def test_literals_round_trip():
    for text in ("[0,1]", "(-inf,0]", "[1,inf)", "[0,1]+[2,3]",
                 "(-inf,0]+[1,2]+[5/2,3]"):
        r = iv.parse_interval_region(text)
        assert iv.parse_interval_region(str(r)) == r
    assert str(iv.parse_interval_region("[0,1]+[1,2]")) == "[0,2]"
    with pytest.raises(ValueError):
        iv.parse_interval_region("(0,1)")
