"""Loop-free connected multigraphs with individually numbered edges.

Edges keep their identity (id = position in the edge list) because the
tree bijection distinguishes parallel edges. Vertices are dense ints
``0..n-1``. Instances are immutable and hashable, so per-graph caches
elsewhere in the package can key on the graph itself.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import BadVertexId, Disconnected, LoopEdge, VertexNotInSet

Edge = tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((int(u), int(v)) for u, v in self.edges)
        )
        if self.n < 1:
            raise Disconnected("a graph needs at least one vertex")
        for u, v in self.edges:
            if not (0 <= u < self.n) or not (0 <= v < self.n):
                raise BadVertexId(f"edge ({u}, {v}) outside vertex range [0, {self.n})")
            if u == v:
                raise LoopEdge(f"loop at vertex {u} is not allowed")
        if not self._is_connected():
            raise Disconnected("graph is not connected")

    def _is_connected(self) -> bool:
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        return all(seen)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def neighbor_multiplicities(self) -> tuple[dict[int, int], ...]:
        """For each vertex, the map neighbor -> number of parallel edges."""
        mult: list[dict[int, int]] = [{} for _ in range(self.n)]
        for u, v in self.edges:
            mult[u][v] = mult[u].get(v, 0) + 1
            mult[v][u] = mult[v].get(u, 0) + 1
        return tuple(mult)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.degrees[v]

    def edge_multiplicity(self, u: int, v: int) -> int:
        self.check_vertex(u)
        self.check_vertex(v)
        return self.neighbor_multiplicities[u].get(v, 0)

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise BadVertexId(f"vertex {v} outside range [0, {self.n})")


def build_graph(n: int, edges: Iterable[Edge]) -> Multigraph:
    """Validate and freeze a multigraph; edge ids follow input order."""
    return Multigraph(n, tuple(edges))


def laplacian(graph: Multigraph) -> list[list[int]]:
    """Degree matrix minus adjacency (with multiplicities); rows sum to 0."""
    q = [[0] * graph.n for _ in range(graph.n)]
    for u, v in graph.edges:
        q[u][u] += 1
        q[v][v] += 1
        q[u][v] -= 1
        q[v][u] -= 1
    return q


def reduced_laplacian(graph: Multigraph, q: int) -> list[list[int]]:
    """Laplacian with row q and column q deleted; survivor order preserved."""
    graph.check_vertex(q)
    full = laplacian(graph)
    return [
        [full[i][j] for j in range(graph.n) if j != q]
        for i in range(graph.n)
        if i != q
    ]


def outdeg(graph: Multigraph, subset: Iterable[int], v: int) -> int:
    """Number of edges (with multiplicity) from v to vertices outside subset."""
    members = frozenset(subset)
    for w in members:
        graph.check_vertex(w)
    graph.check_vertex(v)
    if v not in members:
        raise VertexNotInSet(f"vertex {v} is not in the given set")
    return sum(
        mult
        for w, mult in graph.neighbor_multiplicities[v].items()
        if w not in members
    )
