"""Divisors, chip-firing moves, Dhar's check, and the reduction pipeline.

A divisor is a plain sequence of ints indexed by vertex id (dollar counts,
debt allowed); a firing script is an int per vertex, positive for fires
and negative for borrows, realizing ``result = start - Q @ script``.

Reduction runs in three phases: an exact generalized-inverse shift that
clamps every off-base value below its vertex degree, a borrowing sweep
that clears debt, and repeated set-firings driven by the burning check
until the divisor passes it. The per-graph generalized inverse and Smith
form are cached, so repeat reductions on one graph are cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import DimensionMismatch
from .graph import Multigraph, laplacian, reduced_laplacian
from .linalg import (
    SnfDecomposition,
    floor_rational_vector,
    generalized_inverse_lq,
    mat_vec,
    smallest_reduced_eigenvalue,
    smith_normal_form,
    solve_integer,
)

Divisor = Sequence[int]


@dataclass(frozen=True)
class MoveStats:
    """Vertex-move accounting: a set fired k times counts as k*|set| moves."""

    step2_moves: int
    step3_moves: int
    dhar_restarts: int


@dataclass(frozen=True)
class DharResult:
    reduced: bool
    burning_order: tuple[int, ...] | None = None
    negative_vertex: int | None = None
    stuck_set: frozenset[int] | None = None

    def __bool__(self) -> bool:
        return self.reduced


@dataclass(frozen=True)
class ReduceTrace:
    """Intermediates of the reduction, for bound reporting and step checks."""

    after_step1: tuple[int, ...]
    after_step2: tuple[int, ...]
    final: tuple[int, ...]
    script: tuple[int, ...]
    stats: MoveStats


@lru_cache(maxsize=None)
def _cached_lq(graph: Multigraph, q: int):
    return generalized_inverse_lq(laplacian(graph), q)


@lru_cache(maxsize=None)
def _cached_snf(graph: Multigraph) -> SnfDecomposition:
    return smith_normal_form(laplacian(graph))


@lru_cache(maxsize=None)
def _cached_lambda2(graph: Multigraph, q: int) -> float:
    return smallest_reduced_eigenvalue(reduced_laplacian(graph, q))


def _check_divisor(graph: Multigraph, values: Divisor) -> list[int]:
    if len(values) != graph.n:
        raise DimensionMismatch(
            f"divisor has {len(values)} entries for a graph on {graph.n} vertices"
        )
    return [int(x) for x in values]


def degree(values: Divisor) -> int:
    return sum(values)


def apply_firing(graph: Multigraph, values: Divisor, script: Sequence[int]) -> list[int]:
    """Run a firing script: returns values - Q @ script. Degree is preserved."""
    d = _check_divisor(graph, values)
    x = _check_divisor(graph, script)
    result = [d[v] - graph.degrees[v] * x[v] for v in range(graph.n)]
    for u, w in graph.edges:
        result[u] += x[w]
        result[w] += x[u]
    return result


def is_reduced(graph: Multigraph, values: Divisor, q: int) -> DharResult:
    """Burning check for q-reducedness, with a certificate either way.

    TRUE comes with the burning order; FALSE with the first in-debt vertex
    or with the stuck set whose members all hold at least their out-degree.
    Vertices burn in ascending id order among the eligible, so certificates
    are deterministic.
    """
    graph.check_vertex(q)
    d = _check_divisor(graph, values)
    for v in range(graph.n):
        if v != q and d[v] < 0:
            return DharResult(reduced=False, negative_vertex=v)
    alive = set(range(graph.n)) - {q}
    out = [graph.edge_multiplicity(v, q) if v != q else 0 for v in range(graph.n)]
    order = []
    while alive:
        burn = next((v for v in sorted(alive) if d[v] < out[v]), None)
        if burn is None:
            return DharResult(reduced=False, stuck_set=frozenset(alive))
        alive.discard(burn)
        order.append(burn)
        for w, mult in graph.neighbor_multiplicities[burn].items():
            if w in alive:
                out[w] += mult
    return DharResult(reduced=True, burning_order=tuple(order))


def _step1(graph: Multigraph, d: list[int], q: int) -> tuple[list[int], list[int]]:
    """Shift by the floored generalized-inverse image; |result(v)| < deg(v) off q."""
    script = floor_rational_vector(mat_vec(_cached_lq(graph, q), d))
    return apply_firing(graph, d, script), script


def _step2(
    graph: Multigraph, d: list[int], q: int, descending: bool = False
) -> tuple[list[int], list[int], int]:
    """Borrow at in-debt vertices until none remain off q.

    Selection order (ascending id by default) provably does not affect the
    outcome or the move count; the knob exists so tests can confirm that.
    """
    d = list(d)
    script = [0] * graph.n
    moves = 0
    ids = range(graph.n - 1, -1, -1) if descending else range(graph.n)
    while True:
        v = next((v for v in ids if v != q and d[v] < 0), None)
        if v is None:
            return d, script, moves
        d[v] += graph.degrees[v]
        for w, mult in graph.neighbor_multiplicities[v].items():
            d[w] -= mult
        script[v] -= 1
        moves += 1


def _step3(graph: Multigraph, d: list[int], q: int) -> tuple[list[int], list[int], int, int]:
    """Fire whole unburnt sets until the divisor passes the burning check."""
    d = list(d)
    script = [0] * graph.n
    moves = 0
    restarts = 0
    while True:
        alive = set(range(graph.n)) - {q}
        out = [graph.edge_multiplicity(v, q) if v != q else 0 for v in range(graph.n)]
        stuck = False
        while alive:
            burn = next((v for v in sorted(alive) if d[v] < out[v]), None)
            if burn is None:
                stuck = True
                break
            alive.discard(burn)
            for w, mult in graph.neighbor_multiplicities[burn].items():
                if w in alive:
                    out[w] += mult
        if not stuck:
            return d, script, moves, restarts
        # every live vertex with an exit can fire at least once
        k = min(d[v] // out[v] for v in alive if out[v] > 0)
        for v in alive:
            d[v] -= k * out[v]
            script[v] += k
        for u, w in graph.edges:
            if u in alive and w not in alive:
                d[w] += k
            elif w in alive and u not in alive:
                d[u] += k
        moves += k * len(alive)
        restarts += 1


def reduce_steps(
    graph: Multigraph, values: Divisor, q: int, step2_descending: bool = False
) -> ReduceTrace:
    """Full reduction with per-step intermediates exposed."""
    graph.check_vertex(q)
    d = _check_divisor(graph, values)
    if graph.n == 1:
        final = (d[0],)
        return ReduceTrace(final, final, final, (0,), MoveStats(0, 0, 0))
    d1, x1 = _step1(graph, d, q)
    d2, x2, borrows = _step2(graph, d1, q, descending=step2_descending)
    d3, x3, fires, restarts = _step3(graph, d2, q)
    script = [x1[v] + x2[v] + x3[v] for v in range(graph.n)]
    shift = script[q]  # all-ones lies in ker Q, so pin script(q) = 0
    if shift:
        script = [x - shift for x in script]
    return ReduceTrace(
        after_step1=tuple(d1),
        after_step2=tuple(d2),
        final=tuple(d3),
        script=tuple(script),
        stats=MoveStats(step2_moves=borrows, step3_moves=fires, dhar_restarts=restarts),
    )


def reduce(graph: Multigraph, values: Divisor, q: int) -> tuple[list[int], list[int], MoveStats]:
    """The unique q-reduced divisor equivalent to the input.

    Also returns the aggregate firing script x (with x(q) = 0) realizing
    ``reduced = input - Q @ x`` and the move statistics.
    """
    trace = reduce_steps(graph, values, q)
    return list(trace.final), list(trace.script), trace.stats


def equivalent(
    graph: Multigraph, first: Divisor, second: Divisor
) -> tuple[bool, list[int] | None]:
    """Whether two divisors differ by a firing script; returns the witness.

    Decided by exact lattice membership of the difference in the image of
    the Laplacian, not by comparing reductions.
    """
    a = _check_divisor(graph, first)
    b = _check_divisor(graph, second)
    if degree(a) != degree(b):
        return False, None
    diff = [a[v] - b[v] for v in range(graph.n)]
    witness = solve_integer(laplacian(graph), diff, decomposition=_cached_snf(graph))
    if witness is None:
        return False, None
    return True, witness


def to_critical(graph: Multigraph, values: Divisor, q: int) -> list[int]:
    """The dual configuration: deg(v)-1-D(v) off q, degree preserved at q."""
    graph.check_vertex(q)
    d = _check_divisor(graph, values)
    c = [graph.degrees[v] - 1 - d[v] if v != q else 0 for v in range(graph.n)]
    c[q] = degree(d) - sum(c[v] for v in range(graph.n) if v != q)
    return c


def _offbase_l1(values: Divisor, q: int) -> int:
    return sum(abs(x) for v, x in enumerate(values) if v != q)


def lambda2(graph: Multigraph, q: int) -> float:
    """Smallest reduced-Laplacian eigenvalue, cached per (graph, q)."""
    return _cached_lambda2(graph, q)


def move_bound(graph: Multigraph, q: int, start: Divisor, end: Divisor) -> float:
    """Upper bound on one-type move counts between two equivalent divisors:
    sqrt(n)/lambda2 times the sum of both off-base l1 norms."""
    graph.check_vertex(q)
    a = _check_divisor(graph, start)
    b = _check_divisor(graph, end)
    total = _offbase_l1(a, q) + _offbase_l1(b, q)
    if total == 0:
        return 0.0
    return math.sqrt(graph.n) / lambda2(graph, q) * total


def coarse_move_bound(graph: Multigraph, q: int) -> float:
    """Divisor-independent ceiling 4*sqrt(n)*m/lambda2 on either phase."""
    graph.check_vertex(q)
    if graph.m == 0:
        return 0.0
    return 4.0 * math.sqrt(graph.n) * graph.m / lambda2(graph, q)
