"""The degree-zero divisor class group and its law on reduced representatives.

The presentation comes from the Smith form of the reduced Laplacian:
invariant factors are the nontrivial diagonal entries, and the generator
for factor i is column i of the inverse row transform, read as a divisor
on the non-base vertices and balanced to degree zero at the base. Group
elements are stored as their unique q-reduced representative, so equality
of elements is plain tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .divisors import Divisor, degree, reduce
from .errors import GraphMismatch, NonzeroDegree
from .graph import Multigraph, reduced_laplacian
from .linalg import determinant, exact_inverse, smith_normal_form
from .rng import SplitMix64


@dataclass(frozen=True)
class JacobianPresentation:
    graph: Multigraph
    q: int
    invariant_factors: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    order: int


@dataclass(frozen=True)
class GroupElement:
    """A degree-zero class, held as its q-reduced representative."""

    graph: Multigraph
    q: int
    values: tuple[int, ...]

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return add(self, other)

    def __neg__(self) -> "GroupElement":
        return neg(self)

    def __rmul__(self, k: int) -> "GroupElement":
        return scalar_mul(k, self)


@lru_cache(maxsize=None)
def jacobian(graph: Multigraph, q: int) -> JacobianPresentation:
    """Invariant factors and degree-zero generators, from the Smith form."""
    graph.check_vertex(q)
    keep = [v for v in range(graph.n) if v != q]
    snf = smith_normal_form(reduced_laplacian(graph, q))
    u_inverse = exact_inverse(snf.u)  # unimodular, so entries are integers
    factors = []
    generators = []
    for i, d in enumerate(snf.diagonal):
        if d <= 1:
            continue
        factors.append(d)
        values = [0] * graph.n
        for row, v in enumerate(keep):
            values[v] = int(u_inverse[row][i])
        values[q] = -sum(values)
        generators.append(tuple(values))
    return JacobianPresentation(
        graph=graph,
        q=q,
        invariant_factors=tuple(factors),
        generators=tuple(generators),
        order=determinant(reduced_laplacian(graph, q)),
    )


def canonical(graph: Multigraph, q: int, values: Divisor) -> GroupElement:
    """Wrap a degree-zero divisor as its unique q-reduced representative."""
    if degree(values) != 0:
        raise NonzeroDegree(f"divisor has degree {degree(values)}, expected 0")
    reduced, _, _ = reduce(graph, values, q)
    return GroupElement(graph=graph, q=q, values=tuple(reduced))


def identity(graph: Multigraph, q: int) -> GroupElement:
    graph.check_vertex(q)
    return GroupElement(graph=graph, q=q, values=(0,) * graph.n)


def _check_same(a: GroupElement, b: GroupElement) -> None:
    if a.graph != b.graph or a.q != b.q:
        raise GraphMismatch("elements live on different graphs or base vertices")


def add(a: GroupElement, b: GroupElement) -> GroupElement:
    _check_same(a, b)
    summed = [x + y for x, y in zip(a.values, b.values)]
    return canonical(a.graph, a.q, summed)


def neg(a: GroupElement) -> GroupElement:
    return canonical(a.graph, a.q, [-x for x in a.values])


def scalar_mul(k: int, a: GroupElement) -> GroupElement:
    """k-fold sum by binary doubling on canonical forms."""
    if k < 0:
        return scalar_mul(-k, neg(a))
    result = identity(a.graph, a.q)
    base = a
    while k:
        if k & 1:
            result = add(result, base)
        k >>= 1
        if k:
            base = add(base, base)
    return result


def random_element(presentation: JacobianPresentation, seed: int) -> GroupElement:
    """Uniform group element: unbiased coefficient per invariant factor.

    Draws a_i below n_i from a seeded splitmix64 stream (factor order is
    fixed, so a seed pins the element) and reduces sum(a_i * g_i).
    """
    rng = SplitMix64(seed)
    values = [0] * presentation.graph.n
    for factor, gen in zip(presentation.invariant_factors, presentation.generators):
        a = rng.below(factor)
        if a:
            values = [x + a * g for x, g in zip(values, gen)]
    return canonical(presentation.graph, presentation.q, values)
