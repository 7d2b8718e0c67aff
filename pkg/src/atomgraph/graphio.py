"""Graph ingestion and emission: JSON objects and DIMACS edge lists."""

import json

from .graph import Graph


def graph_to_dict(g):
    return {"vertices": list(g.labels), "edges": [list(e) for e in g.edge_labels()]}


def graph_from_dict(obj):
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise ValueError("graph JSON must be an object with a 'vertices' list")
    vertices = obj["vertices"]
    edges = obj.get("edges", [])
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise ValueError("'vertices' and 'edges' must be lists")
    for e in edges:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise ValueError(f"malformed edge {e!r}")
    return Graph(vertices, [tuple(e) for e in edges])


def to_dimacs(g):
    """DIMACS text; non-default labels are preserved in ``c vertex`` comments."""
    lines = []
    if list(g.labels) != [str(i + 1) for i in range(g.n)]:
        lines += [f"c vertex {i + 1} {label}" for i, label in enumerate(g.labels)]
    edges = g.edges()
    lines.append(f"p edge {g.n} {len(edges)}")
    lines += [f"e {i + 1} {j + 1}" for i, j in edges]
    return "\n".join(lines) + "\n"


def from_dimacs(text):
    n = m = None
    labels = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts:
            continue
        tag = parts[0]
        if tag == "c":
            if len(parts) >= 4 and parts[1] == "vertex":
                labels[int(parts[2])] = " ".join(parts[3:])
        elif tag == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ValueError(f"line {lineno}: bad problem line {raw!r}")
            n, m = int(parts[2]), int(parts[3])
        elif tag == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before problem line")
            i, j = int(parts[1]), int(parts[2])
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"line {lineno}: vertex out of range")
            edges.append((i - 1, j - 1))
        else:
            raise ValueError(f"line {lineno}: unknown record {tag!r}")
    if n is None:
        raise ValueError("missing 'p edge n m' line")
    if m is not None and m != len(edges):
        raise ValueError(f"header declares {m} edges, found {len(edges)}")
    names = [labels.get(i + 1, str(i + 1)) for i in range(n)]
    return Graph.from_index_edges(n, edges, names)


def parse_graph(text):
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return graph_from_dict(json.loads(text))
    return from_dimacs(text)


def load_graph(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())
