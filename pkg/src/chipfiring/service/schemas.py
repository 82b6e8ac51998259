"""Request and response models for the HTTP API.

Divisor-like payloads (divisors, firing scripts, group generators) carry
their entries as decimal strings so clients with 64-bit JSON parsers can
round-trip arbitrary-precision values.
"""

from __future__ import annotations

import re

from pydantic import BaseModel, Field, field_validator

from ..graph import Multigraph, build_graph

_INT_RE = re.compile(r"^[+-]?[0-9]+$")


class GraphModel(BaseModel):
    n: int = Field(ge=1)
    edges: list[tuple[int, int]]

    def to_graph(self) -> Multigraph:
        return build_graph(self.n, self.edges)

    @classmethod
    def from_graph(cls, graph: Multigraph) -> "GraphModel":
        return cls(n=graph.n, edges=list(graph.edges))


class DivisorModel(BaseModel):
    values: list[str]

    @field_validator("values")
    @classmethod
    def _decimal_strings(cls, values: list[str]) -> list[str]:
        for s in values:
            if not _INT_RE.match(s):
                raise ValueError(f"not a decimal integer string: {s!r}")
        return values

    def to_values(self) -> list[int]:
        return [int(s) for s in self.values]

    @classmethod
    def from_values(cls, values) -> "DivisorModel":
        return cls(values=[str(int(x)) for x in values])


class TreeModel(BaseModel):
    edges: list[int]


class MoveStatsModel(BaseModel):
    step2_moves: int
    step3_moves: int
    dhar_restarts: int


class BoundsModel(BaseModel):
    lambda2: float
    coarse: float
    step2_sharp: float
    step3_sharp: float


class IsReducedRequest(BaseModel):
    graph: GraphModel
    divisor: DivisorModel
    q: int


class IsReducedResponse(BaseModel):
    reduced: bool
    burning_order: list[int] | None = None
    negative_vertex: int | None = None
    stuck_set: list[int] | None = None


class ReduceRequest(BaseModel):
    graph: GraphModel
    divisor: DivisorModel
    q: int


class ReduceResponse(BaseModel):
    reduced_divisor: DivisorModel
    firing_script: DivisorModel
    move_stats: MoveStatsModel
    bounds: BoundsModel


class GroupRequest(BaseModel):
    graph: GraphModel
    q: int


class GroupResponse(BaseModel):
    order: str
    invariant_factors: list[str]
    generators: list[DivisorModel]


class EquivalentRequest(BaseModel):
    graph: GraphModel
    divisor_a: DivisorModel
    divisor_b: DivisorModel


class EquivalentResponse(BaseModel):
    equivalent: bool
    firing_script: DivisorModel | None = None


class SampleTreesRequest(BaseModel):
    graph: GraphModel
    q: int
    seed: int = 0
    count: int = Field(default=1, ge=1)
    order: list[int] | None = None


class SampleTreesResponse(BaseModel):
    seed: int
    trees: list[TreeModel]


class CountTreesRequest(BaseModel):
    graph: GraphModel
    q: int = 0
    brute_force: bool = False


class CountTreesResponse(BaseModel):
    determinant: str
    brute_force_count: str | None = None
    match: bool | None = None


class TreeFromDivisorRequest(BaseModel):
    graph: GraphModel
    q: int
    divisor: DivisorModel
    order: list[int] | None = None


class DivisorFromTreeRequest(BaseModel):
    graph: GraphModel
    q: int
    tree: TreeModel
    order: list[int] | None = None


class VerifyBijectionRequest(BaseModel):
    graph: GraphModel
    q: int
    order: list[int] | None = None


class VerifyBijectionResponse(BaseModel):
    passed: bool
    parking_count: int
    tree_count: int
    determinant: str
    failures: list[str]


class WinnableRequest(BaseModel):
    graph: GraphModel
    divisor: DivisorModel
    q: int


class WinnableResponse(BaseModel):
    winnable: bool
    winning_configuration: DivisorModel


class StrategyRequest(BaseModel):
    graph: GraphModel
    divisor: DivisorModel
    q: int


class StrategyResponse(BaseModel):
    firing_script: DivisorModel


class RankRequest(BaseModel):
    graph: GraphModel
    divisor: DivisorModel
    q: int
    at_least: int


class RankResponse(BaseModel):
    at_least: int
    satisfied: bool


class ErrorResponse(BaseModel):
    error: str
    message: str
