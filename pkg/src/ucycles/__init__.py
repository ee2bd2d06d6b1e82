"""Universal cycles and universal words.

Greedy and graph-based constructions of u-cycles for words (de Bruijn
sequences), permutations, multi-dimensional permutations, multi-dimensional
matrices and set partitions, together with exhaustive verifiers.
"""
from .debruijn import (
    MatrixUCycleSpec,
    TransitionGraph,
    debruijn_graph,
    debruijn_via_euler,
    eulerian_cycle,
    least_rotation,
    line_graph,
    martin,
    matrix_ucycle,
)
from .errors import BudgetExceeded, CyclicOrder, GreedyStall, InvalidInput, NotEulerian
from .greedy import (
    ExtensionIndex,
    GreedyTrace,
    complement_family,
    complement_row,
    extend,
    greedy_ucycle,
    greedy_uword,
)
from .overlap import (
    build_overlap_graph,
    cluster_by_signature,
    d3_keygroup_cycle_check,
    hamiltonian_cycle,
    heads,
    implied_order,
    keys,
    linearize,
    rotations,
    s4_switch,
)
from .patterns import PermMatrix, ReducedWindow, reduce_matrix, reduce_word, windows
from .setpartition import (
    alternating_greedy_words,
    greedy_partition_ucycle,
    greedy_partition_uword,
    partition_pattern,
    search_starts,
)
from .verify import (
    CoverageReport,
    verify_debruijn,
    verify_matrix_ucycle,
    verify_multiperm_ucycle,
    verify_partition_ucycle,
    verify_word_ucycle,
)

__version__ = "0.1.0"

__all__ = [
    "MatrixUCycleSpec",
    "TransitionGraph",
    "debruijn_graph",
    "debruijn_via_euler",
    "eulerian_cycle",
    "least_rotation",
    "line_graph",
    "martin",
    "matrix_ucycle",
    "BudgetExceeded",
    "CyclicOrder",
    "GreedyStall",
    "InvalidInput",
    "NotEulerian",
    "ExtensionIndex",
    "GreedyTrace",
    "complement_family",
    "complement_row",
    "extend",
    "greedy_ucycle",
    "greedy_uword",
    "build_overlap_graph",
    "cluster_by_signature",
    "d3_keygroup_cycle_check",
    "hamiltonian_cycle",
    "heads",
    "implied_order",
    "keys",
    "linearize",
    "rotations",
    "s4_switch",
    "PermMatrix",
    "ReducedWindow",
    "reduce_matrix",
    "reduce_word",
    "windows",
    "alternating_greedy_words",
    "greedy_partition_ucycle",
    "greedy_partition_uword",
    "partition_pattern",
    "search_starts",
    "CoverageReport",
    "verify_debruijn",
    "verify_matrix_ucycle",
    "verify_multiperm_ucycle",
    "verify_partition_ucycle",
    "verify_word_ucycle",
]
