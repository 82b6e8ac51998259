"""Dollar-game winnability, strategy extraction, and rank threshold checks.

A configuration is winnable exactly when its reduced form is solvent at
the base vertex; the reduction's own firing script is then a complete
winning strategy. Rank thresholds brute-force all effective divisors of
the requested degree, which is the whole story at desk scale.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .divisors import Divisor, reduce
from .errors import BadConstant, NotWinnable
from .graph import Multigraph


def winnable(graph: Multigraph, values: Divisor, q: int) -> tuple[bool, list[int]]:
    """Whether some equivalent configuration is debt-free, plus the witness.

    The returned divisor is the q-reduced form; off-base entries are
    nonnegative by construction, so the verdict rides on its q entry.
    """
    reduced, _, _ = reduce(graph, values, q)
    return reduced[q] >= 0, reduced


def winning_strategy(graph: Multigraph, values: Divisor, q: int) -> list[int]:
    """Firing script (zero at q) that moves the start into the winning form."""
    reduced, script, _ = reduce(graph, values, q)
    if reduced[q] < 0:
        raise NotWinnable("no debt-free equivalent configuration exists")
    return script


def rank_at_least(graph: Multigraph, values: Divisor, q: int, c: int) -> bool:
    """Threshold test: can the divisor absorb every debt of total size c?

    c = 0 is plain winnability; c >= 1 subtracts each effective divisor of
    degree c (all c-multisets of vertices) and requires every result to
    stay winnable.
    """
    if c < 0:
        raise BadConstant("threshold must be nonnegative")
    if c == 0:
        return winnable(graph, values, q)[0]
    for spots in combinations_with_replacement(range(graph.n), c):
        attacked = list(values)
        for v in spots:
            attacked[v] -= 1
        if not winnable(graph, attacked, q)[0]:
            return False
    return True
