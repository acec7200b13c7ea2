"""RCC11 qualitative spatial reasoning.

Symbolic relation algebra over the 11 RCC11 base relations (converse,
duals, weak composition tables and their 15-generator derivation), exact
classification in two concrete models (complemented closed disks with
rational geometry; a truncated dyadic least model), hole-relation chains
on the line, and path-consistency constraint solving.
"""

from .relations import (
    ALL_RELS,
    CALCULI,
    RCC5,
    RCC7,
    RCC8,
    RCC11,
    BaseRel,
    Calculus,
    ReductionStats,
    RelSet,
    coarsen,
    converse,
    dual,
    expand,
    reduction_stats,
)
from .table import (
    STANDARD_GENERATORS,
    CompTable,
    GeneratorSet,
    compose,
    derive_table,
    dump_table,
    golden_table,
    load_table,
    parse_table,
    validate_table,
)
from .disks import DiskRegion, Kind, NineMatrix, classify, nine_matrix
from .diskgen import find_witness, generate_pair, interpolate, observe_cell
from .bw import (
    BwRegion,
    HoleKind,
    chain_exists,
    check_axioms,
    classify11,
    contact,
    hole,
    pody_counterexample,
    standard_chain,
)
from .intervals import (
    IntervalRegion,
    boundary_count,
    build_hole_chain,
    regularize,
    strict_hole,
)
from .network import Network, closure, scenario_search

__version__ = "0.1.0"
