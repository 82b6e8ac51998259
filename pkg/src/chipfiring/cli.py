"""Thin command-line client for the HTTP service.

Every subcommand builds a JSON request, posts it to the service (an
in-process instance by default, or a remote one via ``--server``), and
prints the response body. Success exits 0 with JSON on stdout; domain
errors exit 1 with the service's error JSON on stderr; usage errors exit
2. Outputs contain no timestamps, so identical invocations are
byte-identical.

File inputs: graphs use the ``n m`` / ``u v`` text format (``#``
comments), divisors are ``{"values": [decimal strings]}``, edge orders
are a JSON permutation of 0..m-1, trees are ``{"edges": [ids]}``. The
environment variable SANDPILE_TREE_LIMIT overrides the safety limit on
brute-force enumeration sizes.
"""

from __future__ import annotations

import functools
import json
import os
import sys
import warnings
from pathlib import Path

import click
import httpx

from .errors import ChipFiringError
from .formats import parse_divisor, parse_graph, parse_order, parse_tree

_GRAPH_ARG = click.argument("graph_path", metavar="GRAPH", type=click.Path(exists=True, dir_okay=False))
_Q_OPT = click.option("-q", "--base", "q", type=int, required=True, help="Base vertex id.")
_DIVISOR_OPT = click.option(
    "--divisor", "divisor_path", required=True, type=click.Path(exists=True, dir_okay=False),
    help="Divisor JSON file.",
)
_ORDER_OPT = click.option(
    "--order", "order_path", default=None, type=click.Path(exists=True, dir_okay=False),
    help="Edge order JSON file (default: edge-id order).",
)


def _load_graph(path: str) -> dict:
    graph = parse_graph(Path(path).read_text(encoding="utf-8"))
    return {"n": graph.n, "edges": [list(e) for e in graph.edges]}


def _load_divisor(path: str) -> dict:
    values = parse_divisor(Path(path).read_text(encoding="utf-8"))
    return {"values": [str(x) for x in values]}


def _load_order(path: str | None) -> list[int] | None:
    if path is None:
        return None
    return parse_order(Path(path).read_text(encoding="utf-8"))


def _post(ctx: click.Context, endpoint: str, payload: dict) -> None:
    server = ctx.obj["server"]
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            response = client.post(endpoint, json=payload)
        status, body = response.status_code, response.json()
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")  # starlette warns on import here
            from fastapi.testclient import TestClient

        from .service import app

        with TestClient(app, raise_server_exceptions=False) as client:
            response = client.post(endpoint, json=payload)
        status, body = response.status_code, response.json()
    if status != 200:
        click.echo(json.dumps(body, sort_keys=True), err=True)
        sys.exit(1)
    if ctx.obj["output"] == "json":
        click.echo(json.dumps(body, indent=2, sort_keys=True))
    else:
        for line in _plain_lines(body):
            click.echo(line)


def _plain_lines(data: dict, prefix: str = "") -> list[str]:
    lines = []
    for key in sorted(data):
        value = data[key]
        if isinstance(value, dict):
            lines.extend(_plain_lines(value, prefix=f"{prefix}{key}."))
        else:
            lines.append(f"{prefix}{key}: {json.dumps(value)}")
    return lines


def _domain_errors(f):
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ChipFiringError as exc:
            click.echo(
                json.dumps({"error": exc.code, "message": str(exc)}, sort_keys=True),
                err=True,
            )
            sys.exit(1)

    return wrapper


@click.group()
@click.option("--server", default=None, help="Service URL; default runs the service in-process.")
@click.option(
    "--output", type=click.Choice(["json", "plain"]), default="json", show_default=True,
    help="Response rendering on stdout.",
)
@click.pass_context
def main(ctx: click.Context, server: str | None, output: str) -> None:
    """Chip-firing toolkit: reduced divisors, sandpile groups, spanning trees.

    \b
    File schemas:
      GRAPH      text: '#' comments; first line 'n m'; then m lines 'u v'
                 (0-based; repeated lines are parallel edges; edge id =
                 order of appearance)
      --divisor  JSON {"values": ["...", ...]} with decimal-string entries
      --order    JSON permutation of [0, m), highest priority first
      --tree     JSON {"edges": [edge ids]}

    Outputs are JSON on stdout (big integers as decimal strings); identical
    invocations are byte-identical. Domain errors exit 1 with error JSON on
    stderr; usage errors exit 2. SANDPILE_TREE_LIMIT caps brute-force
    enumeration sizes.
    """
    ctx.ensure_object(dict)
    ctx.obj["server"] = server
    ctx.obj["output"] = output


@main.command("is-reduced")
@_GRAPH_ARG
@_DIVISOR_OPT
@_Q_OPT
@click.pass_context
@_domain_errors
def is_reduced_cmd(ctx, graph_path, divisor_path, q):
    """Burning-check verdict with certificate."""
    _post(ctx, "/is-reduced", {
        "graph": _load_graph(graph_path),
        "divisor": _load_divisor(divisor_path),
        "q": q,
    })


@main.command("reduce")
@_GRAPH_ARG
@_DIVISOR_OPT
@_Q_OPT
@click.pass_context
@_domain_errors
def reduce_cmd(ctx, graph_path, divisor_path, q):
    """Unique reduced equivalent, firing script, move stats, and bounds."""
    _post(ctx, "/reduce", {
        "graph": _load_graph(graph_path),
        "divisor": _load_divisor(divisor_path),
        "q": q,
    })


@main.command("group")
@_GRAPH_ARG
@_Q_OPT
@click.pass_context
@_domain_errors
def group_cmd(ctx, graph_path, q):
    """Group order, invariant factors, and degree-zero generators."""
    _post(ctx, "/group", {"graph": _load_graph(graph_path), "q": q})


@main.command("equivalent")
@_GRAPH_ARG
@click.option("--divisor", "divisor_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--other", "other_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.pass_context
@_domain_errors
def equivalent_cmd(ctx, graph_path, divisor_path, other_path):
    """Whether two divisors differ by firing moves; prints the witness."""
    _post(ctx, "/equivalent", {
        "graph": _load_graph(graph_path),
        "divisor_a": _load_divisor(divisor_path),
        "divisor_b": _load_divisor(other_path),
    })


@main.command("sample-tree")
@_GRAPH_ARG
@_Q_OPT
@_ORDER_OPT
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--count", type=int, default=1, show_default=True)
@click.option("--entropy", is_flag=True, help="Draw the seed from the OS instead of --seed.")
@click.pass_context
@_domain_errors
def sample_tree_cmd(ctx, graph_path, q, order_path, seed, count, entropy):
    """Uniform random spanning trees (deterministic per seed)."""
    if entropy:
        seed = int.from_bytes(os.urandom(8), "big")
    _post(ctx, "/sample-tree", {
        "graph": _load_graph(graph_path),
        "q": q,
        "seed": seed,
        "count": count,
        "order": _load_order(order_path),
    })


@main.command("count-trees")
@_GRAPH_ARG
@click.option("-q", "--base", "q", type=int, default=0, show_default=True,
              help="Base vertex for the reduced Laplacian (count is q-independent).")
@click.option("--brute-force", is_flag=True, help="Cross-check by exhaustive enumeration.")
@click.pass_context
@_domain_errors
def count_trees_cmd(ctx, graph_path, q, brute_force):
    """Spanning-tree count as a reduced-Laplacian determinant."""
    _post(ctx, "/count-trees", {
        "graph": _load_graph(graph_path),
        "q": q,
        "brute_force": brute_force,
    })


@main.command("tree-from-divisor")
@_GRAPH_ARG
@_DIVISOR_OPT
@_Q_OPT
@_ORDER_OPT
@click.pass_context
@_domain_errors
def tree_from_divisor_cmd(ctx, graph_path, divisor_path, q, order_path):
    """Map a reduced divisor to its spanning tree."""
    _post(ctx, "/tree-from-divisor", {
        "graph": _load_graph(graph_path),
        "divisor": _load_divisor(divisor_path),
        "q": q,
        "order": _load_order(order_path),
    })


@main.command("divisor-from-tree")
@_GRAPH_ARG
@click.option("--tree", "tree_path", required=True, type=click.Path(exists=True, dir_okay=False),
              help='Tree JSON file {"edges": [ids]}.')
@_Q_OPT
@_ORDER_OPT
@click.pass_context
@_domain_errors
def divisor_from_tree_cmd(ctx, graph_path, tree_path, q, order_path):
    """Map a spanning tree back to its reduced divisor."""
    edges = parse_tree(Path(tree_path).read_text(encoding="utf-8"))
    _post(ctx, "/divisor-from-tree", {
        "graph": _load_graph(graph_path),
        "tree": {"edges": edges},
        "q": q,
        "order": _load_order(order_path),
    })


@main.command("verify-bijection")
@_GRAPH_ARG
@_Q_OPT
@_ORDER_OPT
@click.pass_context
@_domain_errors
def verify_bijection_cmd(ctx, graph_path, q, order_path):
    """Exhaustively certify the divisor/tree bijection on this graph."""
    _post(ctx, "/verify-bijection", {
        "graph": _load_graph(graph_path),
        "q": q,
        "order": _load_order(order_path),
    })


@main.command("winnable")
@_GRAPH_ARG
@_DIVISOR_OPT
@_Q_OPT
@click.pass_context
@_domain_errors
def winnable_cmd(ctx, graph_path, divisor_path, q):
    """Dollar-game winnability and the winning configuration."""
    _post(ctx, "/winnable", {
        "graph": _load_graph(graph_path),
        "divisor": _load_divisor(divisor_path),
        "q": q,
    })


@main.command("strategy")
@_GRAPH_ARG
@_DIVISOR_OPT
@_Q_OPT
@click.pass_context
@_domain_errors
def strategy_cmd(ctx, graph_path, divisor_path, q):
    """Firing script that clears all debt (error if unwinnable)."""
    _post(ctx, "/strategy", {
        "graph": _load_graph(graph_path),
        "divisor": _load_divisor(divisor_path),
        "q": q,
    })


@main.command("rank")
@_GRAPH_ARG
@_DIVISOR_OPT
@_Q_OPT
@click.option("--at-least", "at_least", type=int, required=True,
              help="Threshold c: test whether the divisor rank is >= c.")
@click.pass_context
@_domain_errors
def rank_cmd(ctx, graph_path, divisor_path, q, at_least):
    """Rank threshold test by exhausting effective divisors of degree c."""
    _post(ctx, "/rank", {
        "graph": _load_graph(graph_path),
        "divisor": _load_divisor(divisor_path),
        "q": q,
        "at_least": at_least,
    })


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve_cmd(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
