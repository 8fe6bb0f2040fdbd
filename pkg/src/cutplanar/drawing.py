"""Arc-diagram drawings of linear layouts.

Vertices sit on the x-axis at their layout positions; every edge is the
semicircle above the axis whose diameter spans its endpoints.  Two arcs
cross iff their position intervals strictly interleave, and then they
cross exactly once, at an x-coordinate with a closed form.  All
coordinates are exact rationals, and ties in the element order are
broken by a deterministic lexicographic key, which corresponds to an
infinitesimal perturbation of the drawing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CutplanarError, InvalidLayoutError
from .graph import Graph, LinearLayout

Edge = tuple[int, int]


@dataclass(frozen=True)
class Crossing:
    """A proper crossing of two arcs.

    ``edges`` holds the two crossing edges with position-normalized
    endpoints, ordered so that the pair is lexicographically sorted by
    (left position, right position); this key doubles as the tiebreak.
    """

    edges: tuple[Edge, Edge]   # ((a, b), (c, d)) as vertex ids
    x: Fraction

    def tiebreak(self, pos: dict[int, int]) -> tuple:
        (a, b), (c, d) = self.edges
        return (pos[a], pos[b], pos[c], pos[d])


@dataclass(frozen=True)
class ArcDrawing:
    graph: Graph
    layout: LinearLayout
    crossings: tuple[Crossing, ...]

    def position(self) -> dict[int, int]:
        return self.layout.position()


def _normalize(pos: dict[int, int], e: Edge) -> Edge:
    u, v = e
    return (u, v) if pos[u] < pos[v] else (v, u)


def _interleave(pos, e1: Edge, e2: Edge) -> bool:
    a, b = pos[e1[0]], pos[e1[1]]
    c, d = pos[e2[0]], pos[e2[1]]
    return a < c < b < d or c < a < d < b


def crossing_x(pos, e1: Edge, e2: Edge) -> Fraction:
    """Intersection x-coordinate of the two semicircular arcs: with
    centers m_i and radii r_i, equal heights give
    x = (m1^2 - m2^2 + r2^2 - r1^2) / (2 (m1 - m2))."""
    a, b = Fraction(pos[e1[0]]), Fraction(pos[e1[1]])
    c, d = Fraction(pos[e2[0]]), Fraction(pos[e2[1]])
    m1, r1 = (a + b) / 2, abs(b - a) / 2
    m2, r2 = (c + d) / 2, abs(d - c) / 2
    if m1 == m2:
        raise CutplanarError("concentric arcs cannot properly cross")
    return (m1 * m1 - m2 * m2 + r2 * r2 - r1 * r1) / (2 * (m1 - m2))


def build_arc_drawing(g: Graph, layout: LinearLayout) -> ArcDrawing:
    """All pairwise crossings of the arc diagram of (g, layout)."""
    layout.validate(g)
    pos = layout.position()
    edges = [_normalize(pos, e) for e in g.sorted_edges()]
    edges.sort(key=lambda e: (pos[e[0]], pos[e[1]]))
    crossings = []
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            e1, e2 = edges[i], edges[j]
            if _interleave(pos, e1, e2):
                pair = tuple(sorted((e1, e2),
                                    key=lambda e: (pos[e[0]], pos[e[1]])))
                crossings.append(Crossing(pair, crossing_x(pos, e1, e2)))
    crossings.sort(key=lambda c: (c.x, c.tiebreak(pos)))
    return ArcDrawing(g, layout, tuple(crossings))


@dataclass(frozen=True)
class Element:
    """An element of the drawing: a vertex or a crossing, in x-order."""

    kind: str                  # "vertex" | "crossing"
    x: Fraction
    vertex: int | None = None
    crossing: Crossing | None = None


def element_order(d: ArcDrawing) -> list[Element]:
    """Vertices and crossings in strict total order by (x, kind, tiebreak);
    restricted to vertices this equals the layout order."""
    pos = d.position()
    elems = [Element("vertex", Fraction(i + 1), vertex=v)
             for i, v in enumerate(d.layout.order)]
    elems += [Element("crossing", c.x, crossing=c) for c in d.crossings]
    def key(el: Element):
        if el.kind == "vertex":
            return (el.x, 0, (el.vertex,))
        return (el.x, 1, el.crossing.tiebreak(pos))
    elems.sort(key=key)
    return elems


def vertical_cut_edges(d: ArcDrawing, x0) -> set[Edge]:
    """Edges whose arcs are intersected by the vertical line at x0."""
    x0 = Fraction(x0)
    pos = d.position()
    if any(Fraction(p) == x0 for p in pos.values()):
        raise InvalidLayoutError(f"x0 = {x0} coincides with a vertex position")
    out = set()
    for e in d.graph.edges:
        u, v = _normalize(pos, e)
        if Fraction(pos[u]) < x0 < Fraction(pos[v]):
            out.add((u, v))
    return out


# ---------------------------------------------------------------------------
# SVG export
# ---------------------------------------------------------------------------

_SCALE = 40
_MARGIN = 30


def _fx(value: Fraction) -> str:
    return f"{float(value):.3f}"


def to_svg(d: ArcDrawing) -> str:
    """Deterministic SVG of the arc diagram: labeled dots on a baseline,
    semicircular arcs, small markers at crossings."""
    pos = d.position()
    n = d.graph.n
    max_span = max((abs(pos[u] - pos[v]) for u, v in d.graph.edges),
                   default=1)
    width = 2 * _MARGIN + _SCALE * max(n - 1, 1)
    height = _MARGIN + _SCALE * max_span // 2 + _SCALE
    base_y = height - _MARGIN

    def px(p) -> str:
        return _fx(_MARGIN + (Fraction(p) - 1) * _SCALE)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'  <line x1="{_MARGIN}" y1="{base_y}" '
        f'x2="{width - _MARGIN}" y2="{base_y}" stroke="#999"/>',
    ]
    for u, v in d.graph.sorted_edges():
        a, b = sorted((pos[u], pos[v]))
        r = Fraction(b - a, 2) * _SCALE
        lines.append(
            f'  <path d="M {px(a)} {base_y} A {_fx(r)} {_fx(r)} 0 0 1 '
            f'{px(b)} {base_y}" fill="none" stroke="#3366aa"/>')
    for c in d.crossings:
        (a, b), (cc, dd) = c.edges
        m1 = Fraction(pos[a] + pos[b], 2)
        r1 = Fraction(abs(pos[b] - pos[a]), 2)
        y2 = r1 * r1 - (c.x - m1) * (c.x - m1)
        # exact square root is irrational in general; draw at float height
        yy = base_y - (float(y2) ** 0.5) * _SCALE
        lines.append(
            f'  <circle cx="{px(c.x)}" cy="{yy:.3f}" r="3" fill="#cc3333"/>')
    for i, v in enumerate(d.layout.order):
        label = d.graph.labels.get(v, str(v + 1))
        x = px(i + 1)
        lines.append(f'  <circle cx="{x}" cy="{base_y}" r="4" fill="#222"/>')
        lines.append(
            f'  <text x="{x}" y="{base_y + 16}" font-size="11" '
            f'text-anchor="middle">{label}</text>')
    lines.append('</svg>')
    return "\n".join(lines) + "\n"
