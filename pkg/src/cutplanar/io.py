"""File formats.

Graph text format (1-based vertex ids):
    c <comment>
    p <n> <m>
    e <u> <v>

Layout file: one line of n whitespace-separated 1-based vertex ids in
position order.  JSON mirrors use the same 1-based convention.
Vertex ids are dense and 0-based internally; conversion happens here.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .gadgets import CrossoverGadget
from .graph import Graph, LinearLayout


# ---------------------------------------------------------------------------
# graph text format
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    n = None
    m = None
    edges = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate 'p' line", ln)
            if len(parts) != 3:
                raise ParseError("'p' line must be 'p <n> <m>'", ln)
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("'p' line has non-integer fields", ln)
            if n < 0 or m < 0:
                raise ParseError("negative sizes in 'p' line", ln)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("'e' line before 'p' line", ln)
            if len(parts) != 3:
                raise ParseError("'e' line must be 'e <u> <v>'", ln)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("'e' line has non-integer endpoints", ln)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint out of range 1..{n}", ln)
            if u == v:
                raise ParseError("self-loop", ln)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", ln)
    if n is None:
        raise ParseError("missing 'p' line")
    g = Graph.from_edges(n, edges)
    if m is not None and g.m != m:
        raise ParseError(f"'p' line promises {m} edges, found {g.m}")
    return g


def write_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_layout(text: str, g: Graph) -> LinearLayout:
    parts = text.split()
    try:
        order = tuple(int(p) - 1 for p in parts)
    except ValueError:
        raise ParseError("layout file must contain integers")
    layout = LinearLayout(order)
    layout.validate(g)
    return layout


def write_layout(layout: LinearLayout) -> str:
    return " ".join(str(v + 1) for v in layout.order) + "\n"


# ---------------------------------------------------------------------------
# JSON mirrors
# ---------------------------------------------------------------------------

def graph_to_json(g: Graph) -> dict:
    out = {"n": g.n, "edges": [[u + 1, v + 1] for u, v in g.sorted_edges()]}
    if g.labels:
        out["labels"] = {str(v + 1): s for v, s in sorted(g.labels.items())}
    return out


def graph_from_json(obj: dict) -> Graph:
    try:
        n = int(obj["n"])
        edges = [(int(u) - 1, int(v) - 1) for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph JSON: {exc}")
    labels = {int(k) - 1: str(s) for k, s in obj.get("labels", {}).items()}
    return Graph.from_edges(n, edges, labels)


def gadget_to_json(gadget: CrossoverGadget) -> dict:
    return {
        "problem": gadget.problem,
        "shift": gadget.shift,
        "terminals": [t + 1 for t in gadget.terminals],
        "graph": graph_to_json(gadget.graph),
        "layout": [v + 1 for v in gadget.layout.order],
    }


def gadget_from_json(obj: dict) -> CrossoverGadget:
    try:
        problem = obj["problem"]
        shift = int(obj["shift"])
        terminals = tuple(int(t) - 1 for t in obj["terminals"])
        graph = graph_from_json(obj["graph"])
        layout = LinearLayout(tuple(int(v) - 1 for v in obj["layout"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad gadget JSON: {exc}")
    return CrossoverGadget(problem, graph, terminals, layout, shift)


def load_gadget(path: str) -> CrossoverGadget:
    with open(path) as f:
        return gadget_from_json(json.load(f))


# ---------------------------------------------------------------------------
# DOT
# ---------------------------------------------------------------------------

def write_dot(g: Graph) -> str:
    lines = ["graph G {"]
    for v in range(g.n):
        label = g.labels.get(v)
        if label:
            lines.append(f'  {v + 1} [label="{label}"];')
        else:
            lines.append(f"  {v + 1};")
    lines += [f"  {u + 1} -- {v + 1};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot(text: str) -> Graph:
    """Parse the subset of DOT emitted by write_dot."""
    verts: set[int] = set()
    labels: dict[int, str] = {}
    edges = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip().rstrip(";")
        if not line or line.startswith("graph") or line == "}":
            continue
        if "--" in line:
            a, _, b = line.partition("--")
            try:
                u, v = int(a.strip()) - 1, int(b.strip()) - 1
            except ValueError:
                raise ParseError("bad edge line in DOT", ln)
            edges.append((u, v))
            verts |= {u, v}
        else:
            name, _, attr = line.partition("[")
            try:
                v = int(name.strip()) - 1
            except ValueError:
                raise ParseError("bad node line in DOT", ln)
            verts.add(v)
            if attr:
                key, _, val = attr.rstrip("]").partition("=")
                if key.strip() == "label":
                    labels[v] = val.strip().strip('"')
    n = max(verts) + 1 if verts else 0
    return Graph.from_edges(n, edges, labels)
