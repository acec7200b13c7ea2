"""Bitmask kernels for the truncated dyadic model sweeps.

Regions at depth d are subsets of the 2^d leaf cells, stored as integer
bitmasks (bit i = the cell whose binary name is i written with d digits).
The exhaustive checks (axiom sweeps over all region triples, composition
soundness over all triples) are the hot loops of the package; they run on
either a numba backend or a pure-numpy fallback.

Backend selection: environment variable ``RCC11_BACKEND`` set to ``numba``
or ``numpy`` (anything else, or unset, means "numba if importable").
``benchmarks/bench_kernels.py`` compares the two lanes.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via RCC11_BACKEND=numpy
    HAVE_NUMBA = False

    def njit(*args, **kwargs):  # type: ignore[misc]
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


MAX_GRID_DEPTH = 3  # full pairwise grids are quadratic in 2^(2^d)


def backend() -> str:
    env = os.environ.get("RCC11_BACKEND", "auto").lower()
    if env == "numpy":
        return "numpy"
    if env == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("RCC11_BACKEND=numba but numba is not installed")
        return "numba"
    return "numba" if HAVE_NUMBA else "numpy"


@lru_cache(maxsize=None)
def rule_masks(depth: int) -> np.ndarray:
    """Qualifying contact pairs at this depth, as an (n_rules, 2) int64 array.

    Rule r links cell sets a, b when one covers the subtree s1·0·1^n and the
    other covers s1·1·1^n. Enumerating |s1| + 1 + n <= depth is complete for
    depth-d regions: any deeper qualifying pair shares its depth-d ancestor
    pair, which either coincides (overlap) or is itself a listed rule.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    rules = []
    for l1 in range(depth):
        for s1 in range(1 << l1):
            for n in range(depth - l1):
                s = (s1 << 1) | 0
                t = (s1 << 1) | 1
                for _ in range(n):
                    s = (s << 1) | 1
                    t = (t << 1) | 1
                shift = depth - (l1 + 1 + n)
                ones = (1 << (1 << shift)) - 1  # subtree = 2^shift leaves
                rules.append((ones << (s << shift), ones << (t << shift)))
    return np.array(rules, dtype=np.int64)


def subtree_mask(depth: int, name: str) -> int:
    """Bitmask of the depth-d cells below the (shorter or equal) name."""
    if not 1 <= len(name) <= depth or set(name) - {"0", "1"}:
        raise ValueError(f"bad cell name {name!r} for depth {depth}")
    shift = depth - len(name)
    return ((1 << (1 << shift)) - 1) << (int(name, 2) << shift)


# ---------------------------------------------------------------------------
# Scalar reference implementations (plain Python ints)
# ---------------------------------------------------------------------------

def contact_masks(a: int, b: int, depth: int) -> bool:
    if a & b:
        return True
    for mask_s, mask_t in rule_masks(depth):
        ms, mt = int(mask_s), int(mask_t)
        if (a & ms == ms and b & mt == mt) or (a & mt == mt and b & ms == ms):
            return True
    return False


EQ, TPP, TPPI, NTPP, NTPPI, PON, PODY, PODZ, ECN, ECD, DC = range(11)


def classify_masks(a: int, b: int, depth: int) -> int:
    """RCC11 relation index of two proper nonempty depth-d cell sets."""
    full = (1 << (1 << depth)) - 1
    ca, cb = full ^ a, full ^ b
    if a == b:
        return EQ
    if a == cb:
        return ECD
    if a & ~b == 0:  # a < b proper
        return TPP if contact_masks(a, cb, depth) else NTPP
    if b & ~a == 0:
        return TPPI if contact_masks(b, ca, depth) else NTPPI
    if a & b == 0:
        return ECN if contact_masks(a, b, depth) else DC
    if cb & ~a == 0:  # b' < a proper
        return PODY if contact_masks(ca, cb, depth) else PODZ
    return PON


# ---------------------------------------------------------------------------
# numpy lane
# ---------------------------------------------------------------------------

def _contact_pairs_np(A: np.ndarray, B: np.ndarray, depth: int) -> np.ndarray:
    rules = rule_masks(depth)
    out = (A & B) != 0
    for ms, mt in rules:
        out |= ((A & ms) == ms) & ((B & mt) == mt)
        out |= ((A & mt) == mt) & ((B & ms) == ms)
    return out


def _classify_pairs_np(A: np.ndarray, B: np.ndarray, depth: int) -> np.ndarray:
    full = (1 << (1 << depth)) - 1
    CA, CB = full ^ A, full ^ B
    c_a_cb = _contact_pairs_np(A, CB, depth)
    c_b_ca = _contact_pairs_np(B, CA, depth)
    c_ab = _contact_pairs_np(A, B, depth)
    c_ca_cb = _contact_pairs_np(CA, CB, depth)
    sub_ab = (A & ~B) == 0
    sub_ba = (B & ~A) == 0
    sub_cb_a = (CB & ~A) == 0
    eq = A == B
    ecd = A == CB
    disj = (A & B) == 0
    conds = [
        eq,
        ecd,
        sub_ab & c_a_cb,
        sub_ab,
        sub_ba & c_b_ca,
        sub_ba,
        disj & c_ab,
        disj,
        sub_cb_a & c_ca_cb,
        sub_cb_a,
    ]
    vals = [EQ, ECD, TPP, NTPP, TPPI, NTPPI, ECN, DC, PODY, PODZ]
    return np.select(conds, vals, default=PON).astype(np.uint8)


def _a4_violations_np(C: np.ndarray, full: int) -> int:
    idx = np.arange(1, full, dtype=np.int64)
    J = idx[:, None] | idx[None, :]
    viol = 0
    for x in idx:
        lhs = C[x, J]
        rhs = C[x, idx][:, None] | C[x, idx][None, :]
        viol += int(np.count_nonzero(lhs != rhs))
    return viol


def _soundness_violations_np(R: np.ndarray, cells: np.ndarray, full: int) -> int:
    idx = np.arange(1, full, dtype=np.int64)
    AC = R[np.ix_(idx, idx)].astype(np.int64)
    viol = 0
    for b in idx:
        row = R[idx, b].astype(np.int64)
        col = R[b, idx].astype(np.int64)
        cell = cells[row[:, None], col[None, :]]
        ok = (cell >> AC) & 1
        viol += int(np.count_nonzero(ok == 0))
    return viol


# ---------------------------------------------------------------------------
# numba lane
# ---------------------------------------------------------------------------

@njit(cache=True)
def _contact_scalar_nb(a, b, rules):
    if a & b:
        return True
    for i in range(rules.shape[0]):
        ms = rules[i, 0]
        mt = rules[i, 1]
        if (a & ms == ms and b & mt == mt) or (a & mt == mt and b & ms == ms):
            return True
    return False


@njit(cache=True)
def _classify_scalar_nb(a, b, full, rules):
    ca = full ^ a
    cb = full ^ b
    if a == b:
        return 0  # EQ
    if a == cb:
        return 9  # ECD
    if a & ~b == 0:
        return 1 if _contact_scalar_nb(a, cb, rules) else 3  # TPP / NTPP
    if b & ~a == 0:
        return 2 if _contact_scalar_nb(b, ca, rules) else 4  # TPPI / NTPPI
    if a & b == 0:
        return 8 if _contact_scalar_nb(a, b, rules) else 10  # ECN / DC
    if cb & ~a == 0:
        return 6 if _contact_scalar_nb(ca, cb, rules) else 7  # PODY / PODZ
    return 5  # PON


@njit(cache=True)
def _contact_pairs_nb(A, B, rules):
    out = np.empty(A.shape[0], dtype=np.bool_)
    for i in range(A.shape[0]):
        out[i] = _contact_scalar_nb(A[i], B[i], rules)
    return out


@njit(cache=True)
def _classify_pairs_nb(A, B, full, rules):
    out = np.empty(A.shape[0], dtype=np.uint8)
    for i in range(A.shape[0]):
        out[i] = _classify_scalar_nb(A[i], B[i], full, rules)
    return out


@njit(cache=True)
def _contact_grid_nb(full, rules):
    C = np.zeros((full + 1, full + 1), dtype=np.bool_)
    for a in range(1, full + 1):
        for b in range(a, full + 1):
            v = _contact_scalar_nb(a, b, rules)
            C[a, b] = v
            C[b, a] = v
    return C


@njit(cache=True)
def _classify_grid_nb(full, rules):
    R = np.zeros((full + 1, full + 1), dtype=np.uint8)
    for a in range(1, full):
        for b in range(1, full):
            R[a, b] = _classify_scalar_nb(a, b, full, rules)
    return R


@njit(cache=True)
def _a4_violations_nb(C, full):
    viol = 0
    for x in range(1, full):
        for y in range(1, full):
            cxy = C[x, y]
            for z in range(1, full):
                if C[x, y | z] != (cxy or C[x, z]):
                    viol += 1
    return viol


@njit(cache=True)
def _soundness_violations_nb(R, cells, full):
    viol = 0
    for a in range(1, full):
        for b in range(1, full):
            rab = R[a, b]
            for c in range(1, full):
                cell = cells[rab, R[b, c]]
                if (cell >> R[a, c]) & 1 == 0:
                    viol += 1
    return viol


# ---------------------------------------------------------------------------
# Dispatching API
# ---------------------------------------------------------------------------

def contact_pairs(A: np.ndarray, B: np.ndarray, depth: int) -> np.ndarray:
    A = np.ascontiguousarray(A, dtype=np.int64)
    B = np.ascontiguousarray(B, dtype=np.int64)
    if backend() == "numba":
        return _contact_pairs_nb(A, B, rule_masks(depth))
    return _contact_pairs_np(A, B, depth)


def classify_pairs(A: np.ndarray, B: np.ndarray, depth: int) -> np.ndarray:
    A = np.ascontiguousarray(A, dtype=np.int64)
    B = np.ascontiguousarray(B, dtype=np.int64)
    full = (1 << (1 << depth)) - 1
    if backend() == "numba":
        return _classify_pairs_nb(A, B, full, rule_masks(depth))
    return _classify_pairs_np(A, B, depth)


@lru_cache(maxsize=None)
def contact_grid(depth: int) -> np.ndarray:
    """Contact over all masks 1..full inclusive (full region included so the
    distributivity sweep can query joins that hit the unit)."""
    if depth > MAX_GRID_DEPTH:
        raise ValueError(f"grid only supported up to depth {MAX_GRID_DEPTH}")
    full = (1 << (1 << depth)) - 1
    if backend() == "numba":
        return _contact_grid_nb(full, rule_masks(depth))
    idx = np.arange(full + 1, dtype=np.int64)
    A = np.repeat(idx, full + 1)
    B = np.tile(idx, full + 1)
    C = _contact_pairs_np(A, B, depth).reshape(full + 1, full + 1)
    C[0, :] = False
    C[:, 0] = False
    return C


@lru_cache(maxsize=None)
def classify_grid(depth: int) -> np.ndarray:
    """Pairwise relation indices over all proper nonempty masks."""
    if depth > MAX_GRID_DEPTH:
        raise ValueError(f"grid only supported up to depth {MAX_GRID_DEPTH}")
    full = (1 << (1 << depth)) - 1
    if backend() == "numba":
        R = _classify_grid_nb(full, rule_masks(depth))
    else:
        idx = np.arange(full + 1, dtype=np.int64)
        A = np.repeat(idx, full + 1)
        B = np.tile(idx, full + 1)
        R = _classify_pairs_np(A, B, depth).reshape(full + 1, full + 1)
    # 0 and the unit are not regions; poison their rows/columns
    R[0, :] = 255
    R[:, 0] = 255
    R[full, :] = 255
    R[:, full] = 255
    return R


def a4_violations(depth: int) -> int:
    """Exhaustive count of contact-distributivity failures over all region
    triples: C(x, y|z) must equal C(x,y) or C(x,z)."""
    C = contact_grid(depth)
    full = (1 << (1 << depth)) - 1
    if backend() == "numba":
        return int(_a4_violations_nb(C, full))
    return _a4_violations_np(C, full)


def soundness_violations(depth: int, cell_bits: np.ndarray) -> int:
    """Exhaustive count over all region triples (a, b, c) of failures of
    classify(a,c) in cell(classify(a,b), classify(b,c)).

    ``cell_bits`` is an 11x11 array of 11-bit masks for the table cells.
    """
    R = classify_grid(depth)
    full = (1 << (1 << depth)) - 1
    cells = np.ascontiguousarray(cell_bits, dtype=np.int64)
    if backend() == "numba":
        return int(_soundness_violations_nb(R, cells, full))
    return _soundness_violations_np(R, cells, full)
