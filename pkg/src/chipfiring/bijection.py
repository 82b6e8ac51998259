"""Burning bijection between reduced divisors and spanning trees.

Both directions run the same marking loop: grow a burnt set from the base
vertex, always processing the order-smallest unmarked edge on the
boundary, counting how many marked edges each outside vertex has absorbed.
Going forward a vertex burns once its counter exceeds its divisor value
and the burning edge joins the tree; going backward a vertex burns when
the marked edge is a tree edge and the counter fixes the divisor value.
Marks are global and permanent, which is what makes the inverse direction
retrace the forward run edge for edge.

Also holds the brute-force enumeration oracles used to certify the
bijection (and with it, the determinant = tree count identity) on small
graphs.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .divisors import Divisor, is_reduced
from .errors import (
    DimensionMismatch,
    InvalidOrder,
    NotReduced,
    NotSpanningTree,
    TooLarge,
    ValueOutOfRange,
)
from .graph import Multigraph, reduced_laplacian
from .linalg import determinant

DEFAULT_ENUMERATION_LIMIT = 1_000_000
TREE_LIMIT_ENV = "SANDPILE_TREE_LIMIT"


def _effective_limit(limit: int | None) -> int:
    if limit is not None:
        return limit
    raw = os.environ.get(TREE_LIMIT_ENV)
    return int(raw) if raw else DEFAULT_ENUMERATION_LIMIT


def check_order(graph: Multigraph, order: Sequence[int] | None) -> list[int]:
    """Resolve an edge order (default: edge-id order) to a priority list."""
    if order is None:
        return list(range(graph.m))
    order = [int(e) for e in order]
    if sorted(order) != list(range(graph.m)):
        raise InvalidOrder(f"order must be a permutation of 0..{graph.m - 1}")
    return order


def _edge_priorities(graph: Multigraph, order: Sequence[int] | None) -> list[int]:
    priorities = [0] * graph.m
    for position, edge_id in enumerate(check_order(graph, order)):
        priorities[edge_id] = position
    return priorities


def is_spanning_tree(graph: Multigraph, edge_ids: Iterable[int]) -> bool:
    ids = set(edge_ids)
    if len(ids) != graph.n - 1 or any(not 0 <= e < graph.m for e in ids):
        return False
    parent = list(range(graph.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in ids:
        u, w = graph.edges[e]
        ru, rw = find(u), find(w)
        if ru == rw:
            return False
        parent[ru] = rw
    return True


def tree_from_reduced(
    graph: Multigraph,
    q: int,
    order: Sequence[int] | None,
    values: Divisor,
) -> frozenset[int]:
    """Spanning tree paired with a q-reduced divisor under the given order."""
    graph.check_vertex(q)
    priority = _edge_priorities(graph, order)
    values = list(values)
    if len(values) != graph.n:
        raise DimensionMismatch(
            f"divisor has {len(values)} entries for a graph on {graph.n} vertices"
        )
    for v in range(graph.n):
        if v != q and not 0 <= values[v] <= graph.degrees[v] - 1:
            raise ValueOutOfRange(
                f"value {values[v]} at vertex {v} outside [0, deg-1]"
            )
    if not is_reduced(graph, values, q):
        raise NotReduced("divisor fails the burning check")
    burnt = {q}
    marked = [False] * graph.m
    absorbed = [0] * graph.n
    tree = []
    while len(burnt) < graph.n:
        edge = min(
            (
                e
                for e in range(graph.m)
                if not marked[e]
                and ((graph.edges[e][0] in burnt) != (graph.edges[e][1] in burnt))
            ),
            key=priority.__getitem__,
        )
        marked[edge] = True
        u, w = graph.edges[edge]
        v = w if u in burnt else u
        absorbed[v] += 1
        if absorbed[v] > values[v]:
            burnt.add(v)
            tree.append(edge)
    return frozenset(tree)


def reduced_from_tree(
    graph: Multigraph,
    q: int,
    order: Sequence[int] | None,
    tree: Iterable[int],
) -> list[int]:
    """Degree-zero q-reduced divisor paired with a spanning tree."""
    graph.check_vertex(q)
    priority = _edge_priorities(graph, order)
    tree_ids = set(tree)
    if not is_spanning_tree(graph, tree_ids):
        raise NotSpanningTree("edge set does not span the graph")
    burnt = {q}
    marked = [False] * graph.m
    absorbed = [0] * graph.n
    values = [0] * graph.n
    while len(burnt) < graph.n:
        edge = min(
            (
                e
                for e in range(graph.m)
                if not marked[e]
                and ((graph.edges[e][0] in burnt) != (graph.edges[e][1] in burnt))
            ),
            key=priority.__getitem__,
        )
        marked[edge] = True
        u, w = graph.edges[edge]
        v = w if u in burnt else u
        absorbed[v] += 1
        if edge in tree_ids:
            burnt.add(v)
            values[v] = absorbed[v] - 1
    values[q] = -sum(values[v] for v in range(graph.n) if v != q)
    return values


def enumerate_spanning_trees(
    graph: Multigraph, limit: int | None = None
) -> list[frozenset[int]]:
    """All spanning trees by filtering (n-1)-subsets, lexicographic order."""
    cap = _effective_limit(limit)
    candidates = math.comb(graph.m, graph.n - 1)
    if candidates > cap:
        raise TooLarge(f"{candidates} candidate subsets exceed the limit {cap}")
    return [
        frozenset(subset)
        for subset in combinations(range(graph.m), graph.n - 1)
        if is_spanning_tree(graph, subset)
    ]


def enumerate_parking_functions(
    graph: Multigraph, q: int, limit: int | None = None
) -> list[list[int]]:
    """All q-reduced divisors of degree zero, by filtering the value box."""
    graph.check_vertex(q)
    cap = _effective_limit(limit)
    others = [v for v in range(graph.n) if v != q]
    volume = math.prod(graph.degrees[v] for v in others)
    if volume > cap:
        raise TooLarge(f"{volume} candidate assignments exceed the limit {cap}")
    found = []
    for combo in product(*(range(graph.degrees[v]) for v in others)):
        values = [0] * graph.n
        for v, x in zip(others, combo):
            values[v] = x
        values[q] = -sum(combo)
        if is_reduced(graph, values, q):
            found.append(values)
    return found


@dataclass(frozen=True)
class BijectionReport:
    passed: bool
    parking_count: int
    tree_count: int
    determinant: int
    failures: tuple[str, ...] = ()


def verify_bijection(
    graph: Multigraph,
    q: int,
    order: Sequence[int] | None = None,
    limit: int | None = None,
) -> BijectionReport:
    """Certify that the burning map is a bijection on this graph.

    Checks the three counts agree (parking functions, spanning trees, and
    the reduced-Laplacian determinant) and that both round trips are the
    identity on every object.
    """
    parking = enumerate_parking_functions(graph, q, limit=limit)
    trees = enumerate_spanning_trees(graph, limit=limit)
    det = determinant(reduced_laplacian(graph, q))
    failures = []
    if not len(parking) == len(trees) == det:
        failures.append(
            f"counts disagree: {len(parking)} parking, {len(trees)} trees, det {det}"
        )
    tree_set = set(trees)
    images = set()
    for values in parking:
        image = tree_from_reduced(graph, q, order, values)
        images.add(image)
        if image not in tree_set:
            failures.append(f"image {sorted(image)} is not a spanning tree")
        if reduced_from_tree(graph, q, order, image) != values:
            failures.append(f"round trip failed for divisor {values}")
    if len(images) != len(parking):
        failures.append("forward map is not injective")
    if images != tree_set:
        failures.append("forward map is not surjective")
    for tree in trees:
        values = reduced_from_tree(graph, q, order, tree)
        if tree_from_reduced(graph, q, order, values) != tree:
            failures.append(f"round trip failed for tree {sorted(tree)}")
    return BijectionReport(
        passed=not failures,
        parking_count=len(parking),
        tree_count=len(trees),
        determinant=det,
        failures=tuple(failures),
    )
