"""Graph and layout data model with exact cut computations.

Vertices are dense 0-based integers.  All types are immutable after
construction and every operation is a pure function, so values can be
shared freely across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import networkx as nx

from .errors import InvalidLayoutError, OracleLimitError

Edge = tuple[int, int]

EXACT_CUTWIDTH_LIMIT = 18


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices 0..n-1.

    ``labels`` optionally tracks provenance of vertices through
    transformations (e.g. which gadget copy a vertex came from).
    """

    n: int
    edges: frozenset[Edge]
    labels: Mapping[int, str] = field(default_factory=dict)

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            if u > v:
                raise ValueError(f"edge ({u},{v}) not normalized")
        for v in self.labels:
            if not (0 <= v < self.n):
                raise ValueError(f"label on unknown vertex {v}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]],
                   labels: Mapping[int, str] | None = None) -> "Graph":
        es = frozenset(_norm_edge(u, v) for u, v in edges)
        return Graph(n, es, dict(labels) if labels else {})

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def adjacency_masks(self) -> list[int]:
        """Neighborhoods as bitmasks; the workhorse for brute-force solvers."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def relabel(self, perm: Mapping[int, int], n: int | None = None) -> "Graph":
        """Map vertex u to perm[u]; vertices absent from perm are dropped."""
        new_n = self.n if n is None else n
        edges = [(perm[u], perm[v]) for u, v in self.edges
                 if u in perm and v in perm]
        labels = {perm[v]: s for v, s in self.labels.items() if v in perm}
        return Graph.from_edges(new_n, edges, labels)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True)
class LinearLayout:
    """A linear layout: order[i] is the vertex at position i+1.

    Positions are 1-based in formulas (matching the usual cutwidth
    definition) but the order tuple is plain 0-indexed Python data.
    """

    order: tuple[int, ...]

    @staticmethod
    def identity(n: int) -> "LinearLayout":
        return LinearLayout(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.order)

    def position(self) -> dict[int, int]:
        """vertex -> 1-based position."""
        return {v: i + 1 for i, v in enumerate(self.order)}

    def validate(self, g: Graph) -> None:
        if sorted(self.order) != list(range(g.n)):
            raise InvalidLayoutError(
                f"layout over {len(self.order)} entries is not a permutation "
                f"of 0..{g.n - 1}")


@dataclass(frozen=True)
class CutProfile:
    """Per-gap edge-crossing counts of a layout; widths[i] is the cut
    after position i+1 (so there are n-1 entries)."""

    widths: tuple[int, ...]
    max_width: int

    def __post_init__(self):
        expect = max(self.widths) if self.widths else 0
        if self.max_width != expect:
            raise ValueError("max_width inconsistent with widths")


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]
    width: int

    def validate(self, g: Graph) -> None:
        """Check the three path-decomposition invariants structurally."""
        covered = set().union(*self.bags) if self.bags else set()
        if covered != set(range(g.n)):
            raise ValueError("bags do not cover the vertex set")
        for v in range(g.n):
            positions = [i for i, b in enumerate(self.bags) if v in b]
            if not positions:
                raise ValueError(f"vertex {v} in no bag")
            if positions != list(range(positions[0], positions[-1] + 1)):
                raise ValueError(f"vertex {v} not contiguous in bags")
        for u, v in g.edges:
            if not any(u in b and v in b for b in self.bags):
                raise ValueError(f"edge ({u},{v}) in no bag")
        if self.width != max(len(b) for b in self.bags) - 1:
            raise ValueError("width inconsistent with bags")


def cut_profile(g: Graph, layout: LinearLayout) -> CutProfile:
    """Count, for every gap i, the edges {u,v} with pi(u) <= i < pi(v)."""
    layout.validate(g)
    pos = layout.position()
    diffs = [0] * (g.n + 1)
    for u, v in g.edges:
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        diffs[a] += 1
        diffs[b] -= 1
    widths = []
    running = 0
    for i in range(1, g.n):
        running += diffs[i]
        widths.append(running)
    return CutProfile(tuple(widths), max(widths) if widths else 0)


def cutwidth_of_layout(g: Graph, layout: LinearLayout) -> int:
    return cut_profile(g, layout).max_width


def exact_cutwidth(g: Graph, limit: int = EXACT_CUTWIDTH_LIMIT
                   ) -> tuple[int, LinearLayout]:
    """Exact cutwidth by dynamic programming over vertex subsets.

    State = set of already-placed vertices; the cut of a state is the
    number of edges from placed to unplaced vertices, which depends only
    on the set.  Independent of every other module, so it serves as the
    cutwidth oracle in tests.
    """
    if g.n > limit:
        raise OracleLimitError(
            f"graph has {g.n} vertices, exact cutwidth limit is {limit}")
    n = g.n
    if n == 0:
        return 0, LinearLayout(())
    adj = g.adjacency_masks()
    deg = [adj[v].bit_count() for v in range(n)]
    full = (1 << n) - 1
    size = 1 << n
    # cut[mask] = edges crossing from mask to its complement
    cut = [0] * size
    best = [0] * size
    parent = [-1] * size
    big = 1 << 30
    for mask in range(1, size):
        low = mask & (-mask)
        v = low.bit_length() - 1
        rest = mask ^ low
        cut[mask] = cut[rest] + deg[v] - 2 * (adj[v] & rest).bit_count()
        b = big
        arg = -1
        mm = mask
        while mm:
            lb = mm & (-mm)
            u = lb.bit_length() - 1
            prev = best[mask ^ lb]
            if prev < b:
                b = prev
                arg = u
            mm ^= lb
        c = cut[mask]
        best[mask] = b if b > c else c
        parent[mask] = arg
    order: list[int] = []
    mask = full
    while mask:
        v = parent[mask]
        order.append(v)
        mask ^= 1 << v
    order.reverse()
    return best[full], LinearLayout(tuple(order))


def is_planar(g: Graph) -> bool:
    """Planarity test (left-right algorithm via networkx)."""
    ok, _ = nx.check_planarity(g.to_networkx(), counterexample=False)
    return ok


def layout_to_path_decomposition(g: Graph, layout: LinearLayout
                                 ) -> PathDecomposition:
    """Bag i = {vertex at position i} plus every earlier vertex that still
    has a neighbor at position >= i.  Width never exceeds the layout's
    cutwidth."""
    layout.validate(g)
    if g.n == 0:
        return PathDecomposition((), 0)
    pos = layout.position()
    last_pos = {v: max((pos[u] for u in g.neighbors(v)), default=pos[v])
                for v in range(g.n)}
    bags = []
    for i in range(1, g.n + 1):
        v_i = layout.order[i - 1]
        bag = {v_i}
        for u in range(g.n):
            if pos[u] < i and last_pos[u] >= i:
                bag.add(u)
        bags.append(frozenset(bag))
    width = max(len(b) for b in bags) - 1
    return PathDecomposition(tuple(bags), width)


def identify_vertices(g: Graph, u: int, v: int) -> Graph:
    """Merge u and v into a new vertex w with N(w) = N({u,v}).

    Parallel edges collapse and loops are dropped, restoring the
    simple-graph invariant.  The merged vertex keeps u's label (if any)
    and becomes the last vertex of the result.
    """
    if u == v:
        raise ValueError("cannot identify a vertex with itself")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex out of range")
    keep = [w for w in range(g.n) if w not in (u, v)]
    perm = {w: i for i, w in enumerate(keep)}
    w_new = len(keep)
    edges = []
    for a, b in g.edges:
        a2 = w_new if a in (u, v) else perm[a]
        b2 = w_new if b in (u, v) else perm[b]
        if a2 != b2:
            edges.append((a2, b2))
    labels = {perm[x]: s for x, s in g.labels.items() if x in perm}
    merged_label = g.labels.get(u, g.labels.get(v))
    if merged_label is not None:
        labels[w_new] = merged_label
    return Graph.from_edges(w_new + 1, edges, labels)


def random_graph(n: int, p: float, rng) -> Graph:
    """Erdos-Renyi graph from a seeded random.Random instance."""
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2)
             if rng.random() < p]
    return Graph.from_edges(n, edges)
