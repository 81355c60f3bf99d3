"""Exact toolkit for squarefree monomial ideals: regularity and Betti
tables, linear-presentation criteria, Alexander duality, bound functions,
and exhaustive desk-scale verification campaigns."""

from .betti import BettiTable, betti_table, projective_dimension, regularity
from .bounds import (
    BoundReport,
    check_corollary1,
    check_theorem1,
    f_bound,
    faltings_bound,
    g_bound,
    sharp_example,
    theorem_bound,
)
from .complexes import (
    GF2,
    RATIONALS,
    FieldSpec,
    SimplicialComplex,
    reduced_homology_dims,
    restrict_complex,
    stanley_reisner,
)
from .core import (
    UNIT_IDEAL,
    CapacityError,
    Ideal,
    InputError,
    InternalCheckError,
    Monomial,
    PreconditionError,
    TheoremViolationError,
    divides,
    format_ideal,
    gcd,
    ideal_intersection,
    ideal_sum,
    lcm,
    localize,
    minimal_generators,
    parse_ideal,
    restriction,
    truncation,
)
from .duality import (
    DualReport,
    alexander_dual,
    cohomological_dimension,
    height_profile,
    is_S2,
)
from .harness import (
    CheckpointError,
    EnumerationSummary,
    GcdSweepReport,
    SearchReport,
    enumerate_pure_ideals,
    gcd_lemma_sweep,
    open_case_search,
    remark_example,
    verify_range,
)
from .linearity import (
    GenGraph,
    LcmSubgraph,
    gcd_witness,
    generator_graph,
    is_N2_graph,
    is_Nk_betti,
    lcm_induced_subgraph,
)

__version__ = "0.1.0"
