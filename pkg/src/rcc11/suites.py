"""Verification suites: model checks runnable from the CLI and the tests.

Each suite returns a JSON-serializable report with a top-level "passed"
flag, the parameters that produced it (seed, sizes, budgets), and enough
counts to replay any failure.
"""

from __future__ import annotations

import random
import time

from . import bw, intervals as iv, kernels
from .disks import CANONICAL_MATRICES, classify, nine_matrix
from .diskgen import find_witness, generate_pair, random_region, realize_second
from .relations import (
    ALL_RELS,
    RCC7,
    RCC11,
    BaseRel,
    RelSet,
    block_converse,
    block_dual,
    converse,
    dual,
    dual_generating_set,
)
from .table import golden_table

R = BaseRel

#: The ten composition triads that fail extensionally in general RCC models
#: but are witnessed in the disk domain.
FIG3_TRIADS: tuple[tuple[BaseRel, BaseRel, BaseRel], ...] = (
    (R.TPP, R.TPPI, R.PON), (R.TPP, R.TPPI, R.ECN),
    (R.TPP, R.NTPPI, R.TPPI), (R.TPP, R.NTPPI, R.PON), (R.TPP, R.NTPPI, R.ECN),
    (R.TPPI, R.TPP, R.PON), (R.TPPI, R.TPP, R.PODY),
    (R.TPPI, R.NTPP, R.TPP), (R.TPPI, R.NTPP, R.PON), (R.TPPI, R.NTPP, R.PODY),
)


def all_triads() -> list[tuple[BaseRel, BaseRel, BaseRel]]:
    golden = golden_table()
    return [(r1, r2, t)
            for r1 in ALL_RELS for r2 in ALL_RELS
            for t in golden.cell(r1, r2)]


# ---------------------------------------------------------------------------
# dual-laws
# ---------------------------------------------------------------------------

def _algebraic_law_violations() -> list[str]:
    bad: list[str] = []
    for r in ALL_RELS:
        s = RelSet.of(r)
        if converse(converse(s)) != s:
            bad.append(f"converse involution fails at {r.name}")
        if dual(dual(s, "right"), "right") != s:
            bad.append(f"right dual involution fails at {r.name}")
        if dual(dual(s, "left"), "left") != s:
            bad.append(f"left dual involution fails at {r.name}")
        if dual(dual(s, "right"), "left") != dual(dual(s, "left"), "right"):
            bad.append(f"dual commutation fails at {r.name}")
        if converse(dual(converse(s), "right")) != dual(s, "left"):
            bad.append(f"mixed converse/dual law fails at {r.name}")
    for label in dual_generating_set(RCC11):
        block = RCC11.expand(label)
        if dual(dual(block, "left"), "right") != converse(block):
            bad.append(f"double dual != converse at generator {label}")
    # the published 7-relation dual rows, blockwise
    rows7 = {"PP": ("DN", "POD"), "PPI": ("POD", "DN"), "PON": ("PON", "PON"),
             "POD": ("PPI", "PP"), "DN": ("PP", "PPI"), "ECD": ("EQ", "EQ"),
             "EQ": ("ECD", "ECD")}
    for label, (want_r, want_l) in rows7.items():
        if block_dual(RCC7, label, "right") != want_r:
            bad.append(f"RCC7 right dual row fails at {label}")
        if block_dual(RCC7, label, "left") != want_l:
            bad.append(f"RCC7 left dual row fails at {label}")
    for label in dual_generating_set(RCC7):
        got = block_dual(RCC7, block_dual(RCC7, label, "right"), "left")
        if got != block_converse(RCC7, label):
            bad.append(f"RCC7 double dual != converse at generator {label}")
    return bad


def suite_dual_laws(seed: int = 0, samples: int = 100_000) -> dict:
    """Criterion: algebraic dual/converse laws exhaustively, and their
    semantic counterparts on exact disk pairs with zero violations."""
    start = time.time()
    algebraic_bad = _algebraic_law_violations()

    rng = random.Random(f"dual-laws:{seed}")
    semantic_bad = 0
    for i in range(samples):
        if i % 3 == 0:
            a = random_region(rng)
            b = random_region(rng)
        else:
            rel = ALL_RELS[i % 11]
            a = random_region(rng)
            b = realize_second(a, rel, rng)
        r = classify(a, b)
        ok = (classify(b, a) is r.converse
              and classify(a, b.complement()) is r.right_dual
              and classify(a.complement(), b) is r.left_dual
              and classify(a.complement(), b.complement())
              is r.right_dual.left_dual)
        if not ok:
            semantic_bad += 1
    elapsed = time.time() - start
    return {
        "suite": "dual-laws",
        "seed": seed,
        "algebraic_violations": algebraic_bad,
        "semantic": {"samples": samples, "violations": semantic_bad},
        "elapsed_s": round(elapsed, 2),
        "passed": not algebraic_bad and semantic_bad == 0,
    }


# ---------------------------------------------------------------------------
# disk-soundness (consistency + matrices + constructive entry coverage)
# ---------------------------------------------------------------------------

def suite_disk_soundness(seed: int = 0, trials: int = 10_000,
                         budget: int = 10_000) -> dict:
    """Criterion: sampled triples never fall outside their table cell, and
    every one of the 363 cell entries is realized by a constructed triple.
    Also checks that generated pairs reproduce the canonical 9-intersection
    matrices for all 11 relations."""
    start = time.time()
    golden = golden_table()
    rng = random.Random(f"disk-soundness:{seed}")

    pairs = [(r1, r2) for r1 in ALL_RELS for r2 in ALL_RELS]
    soundness_bad = 0
    checked = 0
    for i in range(trials):
        r1, r2 = pairs[i % len(pairs)]
        try:
            a = random_region(rng)
            b = realize_second(a, r1, rng)
            c = realize_second(b, r2, rng)
        except RuntimeError:
            continue
        checked += 1
        if classify(a, c) not in golden.cell(r1, r2):
            soundness_bad += 1

    covered = 0
    uncovered: list[str] = []
    for r1, r2, t in all_triads():
        a, c = generate_pair(t, seed)
        b = find_witness(r1, r2, a, c, seed=seed, budget=budget)
        if (b is not None and classify(a, b) is r1 and classify(b, c) is r2
                and classify(a, c) is t):
            covered += 1
        else:
            uncovered.append(f"{r1.name},{r2.name}:{t.name}")

    matrix_bad = []
    for rel in ALL_RELS:
        for s in range(3):
            a, b = generate_pair(rel, seed + s)
            if nine_matrix(a, b) != CANONICAL_MATRICES[rel]:
                matrix_bad.append(f"{rel.name} seed {seed + s}")

    total_entries = len(all_triads())
    elapsed = time.time() - start
    return {
        "suite": "disk-soundness",
        "seed": seed,
        "triples": {"requested": trials, "checked": checked,
                    "violations": soundness_bad},
        "entry_coverage": {"total": total_entries, "covered": covered,
                           "uncovered": uncovered},
        "nine_matrices": {"violations": matrix_bad},
        "elapsed_s": round(elapsed, 2),
        "passed": (soundness_bad == 0 and covered == total_entries
                   and not matrix_bad),
    }


# ---------------------------------------------------------------------------
# disk-extensionality
# ---------------------------------------------------------------------------

def suite_disk_extensionality(seed: int = 0, instances: int = 10,
                              budget: int = 10_000) -> dict:
    """Criterion: every composition triad of the table admits a witness on
    every generated instance; zero budget exhaustions."""
    start = time.time()
    exhausted: list[str] = []
    checks = 0
    fig3_checked = 0
    for r1, r2, t in all_triads():
        for k in range(instances):
            a, c = generate_pair(t, seed * 1_000_003 + k)
            b = find_witness(r1, r2, a, c, seed=seed + k, budget=budget)
            checks += 1
            if (r1, r2, t) in FIG3_TRIADS:
                fig3_checked += 1
            if b is None or classify(a, b) is not r1 or classify(b, c) is not r2:
                exhausted.append(f"{r1.name},{r2.name}:{t.name}#{k}")
    elapsed = time.time() - start
    return {
        "suite": "disk-extensionality",
        "seed": seed,
        "budget": budget,
        "triads": len(all_triads()),
        "instances_per_triad": instances,
        "witness_checks": checks,
        "fig3_checks": fig3_checked,
        "exhaustions": exhausted,
        "elapsed_s": round(elapsed, 2),
        "passed": not exhausted,
    }


# ---------------------------------------------------------------------------
# dyadic-model suites
# ---------------------------------------------------------------------------

def suite_bw_axioms(depth: int = 3, a5_extra_depth: int = 2) -> dict:
    report = bw.check_axioms(depth, a5_extra_depth)
    report["suite"] = "bw-axioms"
    return report


def suite_bw_chains(k_max: int = 4, chain_depth: int = 5,
                    search_depth: int = 4) -> dict:
    """Criterion: the standard chains classify as NTPP link by link, and
    within the truncation x_{0^(k+1)} reaches x_0 in exactly k steps and
    not in k+1 for k in {1, 2} (exhaustive intermediate search)."""
    start = time.time()
    chain_checks = []
    for k in range(1, k_max + 1):
        chain = bw.standard_chain(k, chain_depth)
        links_ok = all(
            bw.classify11(lo, hi) is R.NTPP
            for lo, hi in zip(chain, chain[1:])
        )
        chain_checks.append({"k": k, "depth": chain_depth, "links_ok": links_ok})

    x0 = bw.BwRegion.cell(search_depth, "0")
    step_checks = []
    for k in (1, 2):
        src = bw.BwRegion.cell(search_depth, "0" * (k + 1))
        reach_k = bw.chain_exists(src, x0, k)
        reach_k1 = bw.chain_exists(src, x0, k + 1)
        step_checks.append({
            "k": k, "depth": search_depth,
            "reachable_in_k": reach_k,
            "reachable_in_k_plus_1": reach_k1,
            "ok": reach_k and not reach_k1,
        })
    elapsed = time.time() - start
    return {
        "suite": "bw-chains",
        "standard_chains": chain_checks,
        "strictness": step_checks,
        "elapsed_s": round(elapsed, 2),
        "passed": (all(c["links_ok"] for c in chain_checks)
                   and all(s["ok"] for s in step_checks)),
    }


def suite_bw_pody(depths: tuple[int, ...] = (3, 4)) -> dict:
    """Criterion: the PODY triads admit no witness at either depth, while
    the positive-triad recipes all yield witnesses."""
    start = time.time()
    counterexamples = [bw.pody_counterexample(d) for d in depths]
    positives = bw.table4_positive_triads(3)
    elapsed = time.time() - start
    return {
        "suite": "bw-pody",
        "counterexamples": counterexamples,
        "positive_triads": positives,
        "elapsed_s": round(elapsed, 2),
        "passed": (all(c["passed"] for c in counterexamples)
                   and positives["passed"]),
    }


def suite_bw_soundness(depth: int = 3, sample_depth: int = 4,
                       samples: int = 4000, seed: int = 0) -> dict:
    """Exhaustive truncated-model composition soundness at the given depth
    plus a sampled sweep one level deeper."""
    start = time.time()
    bits = bw.table_cell_bits()
    exhaustive_bad = kernels.soundness_violations(depth, bits)

    golden = golden_table()
    rng = random.Random(f"bw-soundness:{seed}")
    full = (1 << (1 << sample_depth)) - 1
    sampled_bad = 0
    for _ in range(samples):
        am = rng.randrange(1, full)
        bm = rng.randrange(1, full)
        cm = rng.randrange(1, full)
        rab = BaseRel(kernels.classify_masks(am, bm, sample_depth))
        rbc = BaseRel(kernels.classify_masks(bm, cm, sample_depth))
        rac = BaseRel(kernels.classify_masks(am, cm, sample_depth))
        if rac not in golden.cell(rab, rbc):
            sampled_bad += 1
    elapsed = time.time() - start
    n_regions = (1 << (1 << depth)) - 2
    return {
        "suite": "bw-soundness",
        "exhaustive": {"depth": depth, "triples": n_regions ** 3,
                       "violations": exhaustive_bad},
        "sampled": {"depth": sample_depth, "samples": samples,
                    "violations": sampled_bad, "seed": seed},
        "elapsed_s": round(elapsed, 2),
        "passed": exhaustive_bad == 0 and sampled_bad == 0,
    }


# ---------------------------------------------------------------------------
# holes-1d
# ---------------------------------------------------------------------------

def suite_holes_1d(k_max: int = 3, seed: int = 0) -> dict:
    """Criterion: chain adjacency and (c_1, c_2j) strict holes, the
    boundary counts 2 and 2k+1, explicit odd-power membership paths, and
    the endpoint-inclusion law on every strict-hole pair encountered."""
    start = time.time()
    chain_checks = []
    inclusion_bad = 0
    inclusion_checked = 0

    def check_inclusion(a: iv.IntervalRegion, b: iv.IntervalRegion) -> None:
        nonlocal inclusion_bad, inclusion_checked
        inclusion_checked += 1
        if not set(a.boundary()) < set(b.boundary()):
            inclusion_bad += 1

    for k in range(1, k_max + 1):
        chain = iv.build_hole_chain(k)
        adjacent_ok = True
        for a, b in zip(chain, chain[1:]):
            if iv.strict_hole(a, b):
                check_inclusion(a, b)
            else:
                adjacent_ok = False
        even_ok = True
        for j in range(1, k + 1):
            if iv.strict_hole(chain[0], chain[2 * j - 1]):
                check_inclusion(chain[0], chain[2 * j - 1])
            else:
                even_ok = False
        paths = iv.hole_chain_paths(k)
        paths_ok = all(
            all(iv.strict_hole(a, b) for a, b in zip(p, p[1:]))
            for p in paths.values()
        )
        b0 = iv.boundary_count(chain[0])
        b2k = iv.boundary_count(chain[2 * k - 1])
        gap_blocks_extension = (b2k - b0) < 2 * k + 1
        chain_checks.append({
            "k": k,
            "adjacent_strict_holes": adjacent_ok,
            "c1_to_even_strict_holes": even_ok,
            "odd_power_paths": sorted(paths),
            "paths_ok": paths_ok,
            "boundary_c1": b0,
            "boundary_c2k": b2k,
            "boundary_counts_ok": b0 == 2 and b2k == 2 * k + 1,
            "extension_blocked_by_count": gap_blocks_extension,
        })

    # random strict-hole pairs also obey the endpoint law
    rng = random.Random(f"holes:{seed}")
    found_random = 0
    for _ in range(4000):
        pts = sorted(rng.sample(range(-8, 9), 4))
        try:
            a = iv.regularize([(pts[0], pts[1]), (pts[2], pts[3])])
            b = iv.complement(a)
        except ValueError:
            continue
        for x, y in ((a, b), (iv.regularize([(pts[0], pts[1])]), b)):
            if iv.strict_hole(x, y):
                found_random += 1
                check_inclusion(x, y)

    elapsed = time.time() - start
    ok = (all(c["adjacent_strict_holes"] and c["c1_to_even_strict_holes"]
              and c["paths_ok"] and c["boundary_counts_ok"]
              and c["extension_blocked_by_count"] for c in chain_checks)
          and inclusion_bad == 0)
    return {
        "suite": "holes-1d",
        "chains": chain_checks,
        "endpoint_inclusion": {"checked": inclusion_checked,
                               "violations": inclusion_bad,
                               "random_pairs_found": found_random},
        "elapsed_s": round(elapsed, 2),
        "passed": ok,
    }


SUITES = {
    "dual-laws": suite_dual_laws,
    "disk-soundness": suite_disk_soundness,
    "disk-extensionality": suite_disk_extensionality,
    "bw-axioms": suite_bw_axioms,
    "bw-chains": suite_bw_chains,
    "bw-pody": suite_bw_pody,
    "bw-soundness": suite_bw_soundness,
    "holes-1d": suite_holes_1d,
}
