"""
Affine W-graphs for two-row partitions: exact construction of the move
graphs on row-standard tableaux, and two independent verification paths
(local combinatorial rules and the Hecke module relations).
"""

from .laurent import LaurentPoly, lp_add, lp_monomial, lp_mul
from .tableaux import (
    Partition,
    RowStandardTableau,
    affine_descents,
    dominance_leq,
    enumerate_rsyt,
    enumerate_syt,
    finite_descents,
    is_knuth_move,
    is_standard,
    mo,
    omega_shift,
    pint,
)
from .rsk import RskPair, component_index, finsh, rsk
from .wgraph import (
    LabeledWGraph,
    cells,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    is_nb_admissible,
    is_reduced,
    restrict_parabolic,
    simple_components,
    simple_underlying,
)
from .tworow import (
    Move,
    build_affine_graph,
    build_dual_equiv,
    build_equal_variant,
    build_finite_graph,
    enumerate_moves,
    first_kind_target,
    second_kind_target,
    second_kind_valid,
)
from .affperm import (
    AffinePermutation,
    compose,
    left_descents,
    min_coset_reps,
    right_descents,
    s0_tableau_action,
    upsilon,
)
from .verify import (
    RuleReport,
    check_all_rules,
    check_bonding,
    check_compatibility,
    check_hecke_relations,
    check_polygon,
    check_simplicity,
    classify_restriction_cells,
    hecke_matrices,
)

__version__ = "0.1.0"
