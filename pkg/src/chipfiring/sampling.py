"""Uniform spanning-tree sampling through the group structure.

Draw a uniform group element (coefficients below each invariant factor),
reduce it, and push it through the burning bijection. Uniformity over
trees is inherited from the bijection, so no rejection or reweighting is
needed, and the move bounds make the runtime deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bijection import tree_from_reduced
from .graph import Multigraph
from .jacobian import jacobian, random_element
from .rng import derive_seed


@dataclass(frozen=True)
class SampleReport:
    """Batch of sampled trees, reproducible from (graph, q, order, seed, count)."""

    trees: tuple[frozenset[int], ...]
    seed: int
    counts: dict[tuple[int, ...], int]


def sample_tree(
    graph: Multigraph, q: int, order: Sequence[int] | None, seed: int
) -> frozenset[int]:
    """One uniform spanning tree; the same seed always returns the same tree."""
    presentation = jacobian(graph, q)
    element = random_element(presentation, seed)
    return tree_from_reduced(graph, q, order, element.values)


def sample_trees(
    graph: Multigraph,
    q: int,
    order: Sequence[int] | None,
    master_seed: int,
    count: int,
) -> SampleReport:
    """Batch sampling; sample i uses the seed derived from (master, i)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    trees = tuple(
        sample_tree(graph, q, order, derive_seed(master_seed, i))
        for i in range(count)
    )
    counts: dict[tuple[int, ...], int] = {}
    for tree in trees:
        key = tuple(sorted(tree))
        counts[key] = counts.get(key, 0) + 1
    return SampleReport(trees=trees, seed=master_seed, counts=counts)
