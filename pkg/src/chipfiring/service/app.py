"""HTTP front end over the chip-firing library.

One endpoint per operation, all POST with JSON bodies. Domain errors map
to HTTP 400 with a stable ``{"error": code, "message": ...}`` payload;
request-shape problems stay FastAPI's usual 422. The library caches
per-graph state (generalized inverses, Smith forms, group presentations),
so a long-lived service amortizes the expensive algebra across requests.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import bijection, divisors, game, sampling
from ..errors import ChipFiringError
from ..graph import reduced_laplacian
from ..jacobian import jacobian as group_presentation
from ..linalg import determinant
from . import schemas


def create_app() -> FastAPI:
    app = FastAPI(
        title="chipfiring",
        description="Reduced divisors, sandpile groups, and spanning trees on multigraphs",
        version="0.1.0",
    )

    @app.exception_handler(ChipFiringError)
    def _domain_error(request: Request, exc: ChipFiringError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": exc.code, "message": str(exc)},
        )

    @app.get("/")
    def info() -> dict:
        return {
            "service": "chipfiring",
            "endpoints": sorted(
                route.path for route in app.routes if route.path.startswith("/") and "{" not in route.path
            ),
        }

    @app.post(
        "/is-reduced",
        response_model=schemas.IsReducedResponse,
        response_model_exclude_none=True,
    )
    def is_reduced(req: schemas.IsReducedRequest) -> schemas.IsReducedResponse:
        graph = req.graph.to_graph()
        verdict = divisors.is_reduced(graph, req.divisor.to_values(), req.q)
        return schemas.IsReducedResponse(
            reduced=verdict.reduced,
            burning_order=list(verdict.burning_order)
            if verdict.burning_order is not None
            else None,
            negative_vertex=verdict.negative_vertex,
            stuck_set=sorted(verdict.stuck_set)
            if verdict.stuck_set is not None
            else None,
        )

    @app.post("/reduce", response_model=schemas.ReduceResponse)
    def reduce(req: schemas.ReduceRequest) -> schemas.ReduceResponse:
        graph = req.graph.to_graph()
        trace = divisors.reduce_steps(graph, req.divisor.to_values(), req.q)
        return schemas.ReduceResponse(
            reduced_divisor=schemas.DivisorModel.from_values(trace.final),
            firing_script=schemas.DivisorModel.from_values(trace.script),
            move_stats=schemas.MoveStatsModel(
                step2_moves=trace.stats.step2_moves,
                step3_moves=trace.stats.step3_moves,
                dhar_restarts=trace.stats.dhar_restarts,
            ),
            bounds=schemas.BoundsModel(
                lambda2=divisors.lambda2(graph, req.q) if graph.n > 1 else 0.0,
                coarse=divisors.coarse_move_bound(graph, req.q),
                step2_sharp=divisors.move_bound(
                    graph, req.q, trace.after_step1, trace.after_step2
                ),
                step3_sharp=divisors.move_bound(
                    graph, req.q, trace.after_step2, trace.final
                ),
            ),
        )

    @app.post("/group", response_model=schemas.GroupResponse)
    def group(req: schemas.GroupRequest) -> schemas.GroupResponse:
        graph = req.graph.to_graph()
        presentation = group_presentation(graph, req.q)
        return schemas.GroupResponse(
            order=str(presentation.order),
            invariant_factors=[str(f) for f in presentation.invariant_factors],
            generators=[
                schemas.DivisorModel.from_values(g) for g in presentation.generators
            ],
        )

    @app.post(
        "/equivalent",
        response_model=schemas.EquivalentResponse,
        response_model_exclude_none=True,
    )
    def equivalent(req: schemas.EquivalentRequest) -> schemas.EquivalentResponse:
        graph = req.graph.to_graph()
        same, witness = divisors.equivalent(
            graph, req.divisor_a.to_values(), req.divisor_b.to_values()
        )
        return schemas.EquivalentResponse(
            equivalent=same,
            firing_script=schemas.DivisorModel.from_values(witness)
            if witness is not None
            else None,
        )

    @app.post("/sample-tree", response_model=schemas.SampleTreesResponse)
    def sample_tree(req: schemas.SampleTreesRequest) -> schemas.SampleTreesResponse:
        graph = req.graph.to_graph()
        report = sampling.sample_trees(graph, req.q, req.order, req.seed, req.count)
        return schemas.SampleTreesResponse(
            seed=report.seed,
            trees=[schemas.TreeModel(edges=sorted(t)) for t in report.trees],
        )

    @app.post(
        "/count-trees",
        response_model=schemas.CountTreesResponse,
        response_model_exclude_none=True,
    )
    def count_trees(req: schemas.CountTreesRequest) -> schemas.CountTreesResponse:
        graph = req.graph.to_graph()
        det = determinant(reduced_laplacian(graph, req.q))
        brute = None
        if req.brute_force:
            brute = len(bijection.enumerate_spanning_trees(graph))
        return schemas.CountTreesResponse(
            determinant=str(det),
            brute_force_count=str(brute) if brute is not None else None,
            match=(brute == det) if brute is not None else None,
        )

    @app.post("/tree-from-divisor", response_model=schemas.TreeModel)
    def tree_from_divisor(req: schemas.TreeFromDivisorRequest) -> schemas.TreeModel:
        graph = req.graph.to_graph()
        tree = bijection.tree_from_reduced(
            graph, req.q, req.order, req.divisor.to_values()
        )
        return schemas.TreeModel(edges=sorted(tree))

    @app.post("/divisor-from-tree", response_model=schemas.DivisorModel)
    def divisor_from_tree(req: schemas.DivisorFromTreeRequest) -> schemas.DivisorModel:
        graph = req.graph.to_graph()
        values = bijection.reduced_from_tree(graph, req.q, req.order, req.tree.edges)
        return schemas.DivisorModel.from_values(values)

    @app.post("/verify-bijection", response_model=schemas.VerifyBijectionResponse)
    def verify_bijection(
        req: schemas.VerifyBijectionRequest,
    ) -> schemas.VerifyBijectionResponse:
        graph = req.graph.to_graph()
        report = bijection.verify_bijection(graph, req.q, req.order)
        return schemas.VerifyBijectionResponse(
            passed=report.passed,
            parking_count=report.parking_count,
            tree_count=report.tree_count,
            determinant=str(report.determinant),
            failures=list(report.failures),
        )

    @app.post("/winnable", response_model=schemas.WinnableResponse)
    def winnable(req: schemas.WinnableRequest) -> schemas.WinnableResponse:
        graph = req.graph.to_graph()
        verdict, configuration = game.winnable(graph, req.divisor.to_values(), req.q)
        return schemas.WinnableResponse(
            winnable=verdict,
            winning_configuration=schemas.DivisorModel.from_values(configuration),
        )

    @app.post("/strategy", response_model=schemas.StrategyResponse)
    def strategy(req: schemas.StrategyRequest) -> schemas.StrategyResponse:
        graph = req.graph.to_graph()
        script = game.winning_strategy(graph, req.divisor.to_values(), req.q)
        return schemas.StrategyResponse(
            firing_script=schemas.DivisorModel.from_values(script)
        )

    @app.post("/rank", response_model=schemas.RankResponse)
    def rank(req: schemas.RankRequest) -> schemas.RankResponse:
        graph = req.graph.to_graph()
        satisfied = game.rank_at_least(
            graph, req.divisor.to_values(), req.q, req.at_least
        )
        return schemas.RankResponse(at_least=req.at_least, satisfied=satisfied)

    return app


app = create_app()
