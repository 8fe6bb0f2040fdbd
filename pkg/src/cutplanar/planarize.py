"""Cutwidth-preserving planarization via crossover gadgets.

Given a graph with a linear layout, builds the arc drawing, replaces
every crossing (left to right) by a copy of the gadget, and produces a
layout of the planarized graph with one block per drawing element.  The
resulting cutwidth is at most ctw(input layout) + ctw(gadget layout) + 4,
and the per-gap invariants behind that bound are asserted on every run:
gaps after original vertices never exceed the input cutwidth, and gaps
inside gadget copies never exceed input + gadget + 4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .drawing import build_arc_drawing, element_order
from .errors import GadgetError, OracleLimitError
from .gadgets import CrossoverGadget, certify_is_gadget
from .graph import Graph, LinearLayout, cut_profile, is_planar
from . import solvers


@dataclass(frozen=True)
class PlanarizationResult:
    g_prime: Graph
    layout_prime: LinearLayout
    t_prime: int
    crossings_replaced: int
    width_in: int
    width_out: int
    gadget_width: int
    # vertex ids of g_prime that came from the input graph
    original_vertices: frozenset[int]


def planarize(g: Graph, layout: LinearLayout, t: int,
              gadget: CrossoverGadget, check_gadget: bool = False
              ) -> PlanarizationResult:
    """Replace all crossings of the arc drawing by gadget copies.

    Per-edge tail tracking realizes the left-to-right replacement: each
    original edge keeps its current left attachment vertex, advanced to
    the gadget's right-channel terminal after each of its crossings, so
    remaining crossings keep their original drawing locations.
    """
    if check_gadget and gadget.problem == "is" and not certify_is_gadget(gadget):
        raise GadgetError("gadget failed certification")
    layout.validate(g)
    drawing = build_arc_drawing(g, layout)
    pos = layout.position()
    width_in = cut_profile(g, layout).max_width
    gadget_width = gadget.width

    h = gadget.graph
    u, up, v, vp = gadget.terminals
    tails: dict[tuple[int, int], int] = {}
    new_edges: list[tuple[int, int]] = []
    labels = dict(g.labels)
    drop: set[tuple[int, int]] = set()
    next_id = g.n
    blocks: list[list[int]] = []   # layout blocks, one per element
    elements = element_order(drawing)

    for el in elements:
        if el.kind == "vertex":
            blocks.append([el.vertex])
            continue
        e1, e2 = el.crossing.edges   # position-normalized, pair sorted
        drop.add(tuple(sorted(e1)))
        drop.add(tuple(sorted(e2)))
        a = tails.get(e1, e1[0])
        c = tails.get(e2, e2[0])
        base = next_id
        copy = [base + i for i in range(h.n)]
        for s, tt in h.edges:
            new_edges.append((base + s, base + tt))
        k = len(blocks)
        for w in range(h.n):
            src = h.labels.get(w, str(w))
            labels[base + w] = f"X{k}:{src}"
        # left attachments to current tails, tails advance to u', v'
        new_edges.append((a, base + u))
        new_edges.append((c, base + v))
        tails[e1] = base + up
        tails[e2] = base + vp
        blocks.append([base + w for w in gadget.layout.order])
        next_id += h.n

    # close off crossed edges with their final right segment
    for e, tail in tails.items():
        new_edges.append((tail, e[1]))
    edges = [e for e in g.edges if e not in drop] + new_edges
    g_prime = Graph.from_edges(next_id, edges, labels)

    order = tuple(w for block in blocks for w in block)
    layout_prime = LinearLayout(order)
    ell = len(drawing.crossings)
    prof_out = cut_profile(g_prime, layout_prime)
    width_out = prof_out.max_width

    result = PlanarizationResult(
        g_prime=g_prime, layout_prime=layout_prime,
        t_prime=t + ell * gadget.shift, crossings_replaced=ell,
        width_in=width_in, width_out=width_out, gadget_width=gadget_width,
        original_vertices=frozenset(range(g.n)),
    )
    _assert_invariants(result, prof_out, h, ell, g)
    return result


def _assert_invariants(res: PlanarizationResult, prof_out, h: Graph,
                       ell: int, g: Graph) -> None:
    """Hard runtime checks of the construction's guarantees; a violation
    falsifies the width argument and must never be shipped past."""
    bound = res.width_in + res.gadget_width + 4
    if res.width_out > bound:
        raise AssertionError(
            f"cutwidth bound violated: {res.width_out} > {bound}")
    # per-gap claims: original-vertex gaps <= width_in, gadget gaps <= bound
    order = res.layout_prime.order
    for i, w in enumerate(order[:-1]):
        cut = prof_out.widths[i]
        if w in res.original_vertices:
            if cut > res.width_in:
                raise AssertionError(
                    f"cut after original vertex {w} is {cut} > {res.width_in}")
        elif cut > bound:
            raise AssertionError(
                f"cut after gadget vertex {w} is {cut} > {bound}")
    # vertex / edge accounting
    if res.g_prime.n != g.n + ell * h.n:
        raise AssertionError("vertex count mismatch")
    if res.g_prime.m != g.m + ell * (h.m + 2):
        raise AssertionError("edge count mismatch")
    if not is_planar(res.g_prime):
        raise AssertionError("planarized graph is not planar")


def verify_planarization(g: Graph, layout: LinearLayout, t: int,
                         result: PlanarizationResult, problem: str,
                         brute_limit: int = 24) -> bool:
    """Check planarity, the cutwidth inequality, and the optimum shift
    opt(G') = opt(G) + crossings * shift using brute force on the input
    and the layout DP on the output."""
    if not is_planar(result.g_prime):
        return False
    if result.width_out > result.width_in + result.gadget_width + 4:
        return False
    if g.n > brute_limit:
        raise OracleLimitError(
            f"host graph too large for the brute-force oracle ({g.n})")
    shift_total = result.t_prime - t
    if problem == "is":
        before = solvers.brute_is(g, limit=brute_limit)
        after = solvers.dp_is(result.g_prime, result.layout_prime).optimum
    elif problem == "ds":
        before = solvers.brute_ds(g, limit=brute_limit)
        after = solvers.dp_ds(result.g_prime, result.layout_prime).optimum
    else:
        raise ValueError(f"unknown problem {problem!r}")
    return after == before + shift_total
