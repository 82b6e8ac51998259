"""Text and JSON wire formats.

Graph files are UTF-8 lines: ``#`` starts a comment, the first data line
is ``n m``, then m lines ``u v`` (0-based). A repeated ``u v`` line is a
parallel edge, and edge ids follow the order of appearance. Divisor and
firing-script values travel as decimal strings inside JSON so that
arbitrary-precision entries survive parsers with small native integers.
"""

from __future__ import annotations

import json
import re
from typing import Sequence

from .errors import FormatError
from .graph import Multigraph, build_graph

_INT_RE = re.compile(r"^[+-]?[0-9]+$")


def parse_graph(text: str) -> Multigraph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(_INT_RE.match(p) for p in parts):
            raise FormatError(f"line {lineno}: expected two integers, got {raw!r}")
        rows.append((int(parts[0]), int(parts[1])))
    if not rows:
        raise FormatError("no data lines: expected a leading 'n m' line")
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges but {len(edges)} follow")
    return build_graph(n, edges)


def format_graph(graph: Multigraph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def values_to_strings(values: Sequence[int]) -> list[str]:
    return [str(int(x)) for x in values]


def strings_to_values(strings: Sequence[str]) -> list[int]:
    values = []
    for s in strings:
        if not isinstance(s, str) or not _INT_RE.match(s):
            raise FormatError(f"expected a decimal integer string, got {s!r}")
        values.append(int(s))
    return values


def parse_divisor(text: str) -> list[int]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"divisor file is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict) or "values" not in payload:
        raise FormatError('divisor JSON must be an object with a "values" array')
    if not isinstance(payload["values"], list):
        raise FormatError('"values" must be an array of decimal strings')
    return strings_to_values(payload["values"])


def format_divisor(values: Sequence[int]) -> str:
    return json.dumps({"values": values_to_strings(values)})


def parse_order(text: str) -> list[int]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"order file is not valid JSON: {exc}") from exc
    if not isinstance(payload, list) or not all(isinstance(e, int) for e in payload):
        raise FormatError("edge order must be a JSON array of integers")
    return payload


def parse_tree(text: str) -> list[int]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"tree file is not valid JSON: {exc}") from exc
    if (
        not isinstance(payload, dict)
        or not isinstance(payload.get("edges"), list)
        or not all(isinstance(e, int) for e in payload["edges"])
    ):
        raise FormatError('tree JSON must be an object with an integer "edges" array')
    return payload["edges"]


def format_tree(edge_ids) -> str:
    return json.dumps({"edges": sorted(int(e) for e in edge_ids)})
