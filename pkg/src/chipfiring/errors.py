"""Exception hierarchy shared by every module.

Each error carries a stable machine-readable ``code`` so the HTTP service
and the CLI can emit uniform error payloads.
"""


class ChipFiringError(Exception):
    """Base class for all domain errors."""

    code = "error"


class BadVertexId(ChipFiringError):
    code = "bad_vertex_id"


class LoopEdge(ChipFiringError):
    code = "loop_edge"


class Disconnected(ChipFiringError):
    code = "disconnected"


class VertexNotInSet(ChipFiringError):
    code = "vertex_not_in_set"


class NotSquare(ChipFiringError):
    code = "not_square"


class Singular(ChipFiringError):
    code = "singular"


class NotSymmetric(ChipFiringError):
    code = "not_symmetric"


class DimensionMismatch(ChipFiringError):
    code = "dimension_mismatch"


class NonzeroDegree(ChipFiringError):
    code = "nonzero_degree"


class GraphMismatch(ChipFiringError):
    code = "graph_mismatch"


class NotReduced(ChipFiringError):
    code = "not_reduced"


class ValueOutOfRange(ChipFiringError):
    code = "value_out_of_range"


class NotSpanningTree(ChipFiringError):
    code = "not_spanning_tree"


class InvalidOrder(ChipFiringError):
    code = "invalid_order"


class TooLarge(ChipFiringError):
    code = "too_large"


class NotWinnable(ChipFiringError):
    code = "not_winnable"


class BadConstant(ChipFiringError):
    code = "bad_constant"


class FormatError(ChipFiringError):
    code = "format_error"
