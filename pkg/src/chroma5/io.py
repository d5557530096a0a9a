"""Readers and writers for the three supported graph formats.

* DIMACS .col: ``p edge n m`` header, ``e u v`` lines, 1-based vertices.
* plain edge list: first line ``n``, then one ``u v`` pair per line, 0-based.
* JSON object: ``{"n": ..., "edges": [[u, v], ...]}``.

Writers are byte-deterministic: edges sorted, single spaces, trailing newline.
"""

from __future__ import annotations

import json

from .errors import InputError
from .graph import Graph


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count()}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def read_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 4 or parts[1] not in ("edge", "edges", "col"):
                raise InputError(f"bad DIMACS problem line: {line!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise InputError("DIMACS edge line before problem line")
            if len(parts) != 3:
                raise InputError(f"bad DIMACS edge line: {line!r}")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            edges.append((u, v))
        else:
            raise InputError(f"unrecognized DIMACS line: {line!r}")
    if n is None:
        raise InputError("DIMACS input has no problem line")
    return Graph.from_edge_list(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    for u, v in g.edges():
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise InputError("empty edge-list input")
    try:
        n = int(rows[0])
    except ValueError as exc:
        raise InputError(f"edge-list first line must be the vertex count: {rows[0]!r}") from exc
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"bad edge-list line: {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edge_list(n, edges)


def write_json(g: Graph) -> str:
    payload = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    return json.dumps(payload, separators=(",", ":"), sort_keys=True) + "\n"


def read_json(text: str) -> Graph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON graph: {exc}") from exc
    if not isinstance(payload, dict) or "n" not in payload:
        raise InputError('JSON graph must be an object with "n" and "edges"')
    edges = payload.get("edges", [])
    return Graph.from_edge_list(int(payload["n"]), [(int(u), int(v)) for u, v in edges])


FORMATS = ("dimacs", "edges", "json")


def detect_format(text: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line[0] == "{":
            return "json"
        if line[0] in "pc" and not line[0].isdigit():
            return "dimacs"
        return "edges"
    raise InputError("empty graph input")


def loads(text: str, fmt: str | None = None) -> Graph:
    fmt = fmt or detect_format(text)
    if fmt == "dimacs":
        return read_dimacs(text)
    if fmt == "edges":
        return read_edge_list(text)
    if fmt == "json":
        return read_json(text)
    raise InputError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def dumps(g: Graph, fmt: str = "json") -> str:
    if fmt == "dimacs":
        return write_dimacs(g)
    if fmt == "edges":
        return write_edge_list(g)
    if fmt == "json":
        return write_json(g)
    raise InputError(f"unknown format {fmt!r}; expected one of {FORMATS}")
