"""Chip-firing on multigraphs: reduced divisors, the sandpile group, an
explicit group/tree bijection, and uniform spanning-tree sampling."""

from .bijection import (
    BijectionReport,
    enumerate_parking_functions,
    enumerate_spanning_trees,
    reduced_from_tree,
    tree_from_reduced,
    verify_bijection,
)
from .divisors import (
    DharResult,
    MoveStats,
    apply_firing,
    coarse_move_bound,
    degree,
    equivalent,
    is_reduced,
    move_bound,
    reduce,
    reduce_steps,
    to_critical,
)
from .errors import ChipFiringError
from .game import rank_at_least, winnable, winning_strategy
from .graph import Multigraph, build_graph, laplacian, outdeg, reduced_laplacian
from .jacobian import (
    GroupElement,
    JacobianPresentation,
    add,
    canonical,
    identity,
    jacobian,
    neg,
    random_element,
    scalar_mul,
)
from .linalg import (
    SnfDecomposition,
    determinant,
    exact_inverse,
    floor_rational_vector,
    generalized_inverse_lq,
    smallest_reduced_eigenvalue,
    smith_normal_form,
    solve_integer,
)
from .sampling import SampleReport, sample_tree, sample_trees

__all__ = [
    "BijectionReport",
    "ChipFiringError",
    "DharResult",
    "GroupElement",
    "JacobianPresentation",
    "MoveStats",
    "Multigraph",
    "SampleReport",
    "SnfDecomposition",
    "add",
    "apply_firing",
    "build_graph",
    "canonical",
    "coarse_move_bound",
    "degree",
    "determinant",
    "enumerate_parking_functions",
    "enumerate_spanning_trees",
    "equivalent",
    "exact_inverse",
    "floor_rational_vector",
    "generalized_inverse_lq",
    "identity",
    "is_reduced",
    "jacobian",
    "laplacian",
    "move_bound",
    "neg",
    "outdeg",
    "random_element",
    "rank_at_least",
    "reduce",
    "reduce_steps",
    "reduced_from_tree",
    "reduced_laplacian",
    "sample_tree",
    "sample_trees",
    "scalar_mul",
    "smallest_reduced_eigenvalue",
    "smith_normal_form",
    "solve_integer",
    "to_critical",
    "tree_from_reduced",
    "verify_bijection",
    "winnable",
    "winning_strategy",
]
