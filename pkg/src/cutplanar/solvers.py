"""Exact optimization oracles for Independent Set, Dominating Set and
Vertex Cover.

Two independent routes are provided for IS and DS:

* brute_* : branch-and-bound over vertex bitmasks, exact for small n.
* dp_*    : dynamic programming over the path decomposition derived from
  a linear layout, with 2 states per bag vertex for IS and 3 for DS.
  Peak live states stay within 2^(w+1) resp. 3^(w+1) for a layout of
  cutwidth w; the DS program picks a dense numpy table or a sparse dict
  (with sound dominance pruning) depending on the bag width.

brute_vc is a separate edge-branching search, deliberately not derived
from brute_is, so the IS/VC complementarity can be asserted as a real
cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OracleLimitError, ResourceLimitError
from .graph import Graph, LinearLayout, cut_profile, layout_to_path_decomposition

BRUTE_LIMIT = 28
MEMORY_BUDGET_BYTES = 2 << 30

# Unreachable markers.  Large enough in magnitude that adding/subtracting
# 1 per introduced vertex can never bring a dead state back into the
# range of real values (int32 tables, instance sizes << 10^6).
_IS_NEG = -(1 << 24)
_DS_INF = 1 << 24


# ---------------------------------------------------------------------------
# brute force
# ---------------------------------------------------------------------------

def _check_brute_size(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise OracleLimitError(
            f"graph has {g.n} vertices, brute-force limit is {limit}")


def brute_is(g: Graph, limit: int = BRUTE_LIMIT) -> int:
    """Maximum independent set size by branch and bound."""
    return brute_is_excluding(g, set(), limit)


def brute_is_excluding(g: Graph, excluded: set[int],
                       limit: int = BRUTE_LIMIT) -> int:
    """Maximum independent set avoiding all vertices in ``excluded``."""
    _check_brute_size(g, limit)
    adj = g.adjacency_masks()
    avail = (1 << g.n) - 1
    for v in excluded:
        avail &= ~(1 << v)
    best = 0

    def grow(av: int, size: int) -> None:
        nonlocal best
        if size + av.bit_count() <= best:
            return
        if av == 0:
            best = max(best, size)
            return
        # branch on a vertex of maximum degree within the candidate set
        mm, pick, pick_deg = av, -1, -1
        while mm:
            lb = mm & (-mm)
            v = lb.bit_length() - 1
            d = (adj[v] & av).bit_count()
            if d > pick_deg:
                pick_deg, pick = d, v
            mm ^= lb
        if pick_deg == 0:
            best = max(best, size + av.bit_count())
            return
        grow(av & ~(adj[pick] | (1 << pick)), size + 1)  # take pick
        grow(av & ~(1 << pick), size)                    # skip pick
    grow(avail, 0)
    return best


def brute_ds(g: Graph, limit: int = BRUTE_LIMIT) -> int:
    """Minimum dominating set size by branch and bound.

    Branches on the closed neighborhood of an undominated vertex with the
    fewest candidate dominators.
    """
    _check_brute_size(g, limit)
    n = g.n
    adj = g.adjacency_masks()
    closed = [adj[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    best = n  # all vertices always dominate

    def search(dominated: int, size: int) -> None:
        nonlocal best
        if size >= best:
            return
        if dominated == full:
            best = size
            return
        # pick the undominated vertex with the fewest dominators
        undom = full & ~dominated
        pick, pick_cnt = -1, 1 << 30
        mm = undom
        while mm:
            lb = mm & (-mm)
            v = lb.bit_length() - 1
            c = closed[v].bit_count()
            if c < pick_cnt:
                pick_cnt, pick = c, v
            mm ^= lb
        # lower bound: remaining undominated vertices / max closed degree
        maxdeg = max(closed[v].bit_count() for v in range(n))
        if size + (undom.bit_count() + maxdeg - 1) // maxdeg >= best:
            return
        mm = closed[pick]
        while mm:
            lb = mm & (-mm)
            w = lb.bit_length() - 1
            search(dominated | closed[w], size + 1)
            mm ^= lb
    search(0, 0)
    return best


def brute_ds_avoiding(g: Graph, avoid: set[int],
                      limit: int = BRUTE_LIMIT) -> int | None:
    """Minimum size of a dominating set disjoint from ``avoid``; None if no
    dominating set avoids those vertices."""
    _check_brute_size(g, limit)
    n = g.n
    adj = g.adjacency_masks()
    closed = [adj[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    avoid_mask = 0
    for v in avoid:
        avoid_mask |= 1 << v
    best = [None]

    def search(dominated: int, size: int) -> None:
        if best[0] is not None and size >= best[0]:
            return
        if dominated == full:
            best[0] = size
            return
        undom = full & ~dominated
        pick, pick_cnt = -1, 1 << 30
        mm = undom
        while mm:
            lb = mm & (-mm)
            v = lb.bit_length() - 1
            c = (closed[v] & ~avoid_mask).bit_count()
            if c < pick_cnt:
                pick_cnt, pick = c, v
            mm ^= lb
        mm = closed[pick] & ~avoid_mask
        while mm:
            lb = mm & (-mm)
            w = lb.bit_length() - 1
            search(dominated | closed[w], size + 1)
            mm ^= lb
    search(0, 0)
    return best[0]


def brute_vc(g: Graph, limit: int = BRUTE_LIMIT) -> int:
    """Minimum vertex cover by edge branching (independent of brute_is)."""
    _check_brute_size(g, limit)
    adj = g.adjacency_masks()
    best = g.n

    def matching_bound(alive: int) -> int:
        # greedy matching gives a lower bound on the cover size
        bound = 0
        used = 0
        mm = alive
        while mm:
            lb = mm & (-mm)
            v = lb.bit_length() - 1
            mm ^= lb
            if used & (1 << v):
                continue
            cand = adj[v] & alive & ~used
            if cand:
                w = (cand & (-cand)).bit_length() - 1
                used |= (1 << v) | (1 << w)
                bound += 1
        return bound

    def search(alive: int, size: int) -> None:
        nonlocal best
        if size >= best:
            return
        # find any uncovered edge among alive vertices
        edge = None
        mm = alive
        while mm:
            lb = mm & (-mm)
            v = lb.bit_length() - 1
            nb = adj[v] & alive
            if nb:
                w = (nb & (-nb)).bit_length() - 1
                edge = (v, w)
                break
            mm ^= lb
        if edge is None:
            best = size
            return
        if size + matching_bound(alive) >= best:
            return
        v, w = edge
        search(alive & ~(1 << v), size + 1)
        search(alive & ~(1 << w), size + 1)
    search((1 << g.n) - 1, 0)
    return best


def brute_vc_excluding(g: Graph, removed: set[int],
                       limit: int = BRUTE_LIMIT) -> int:
    """Minimum vertex cover of g with ``removed`` deleted (equivalently,
    the non-removed part of a minimum cover containing ``removed``)."""
    keep = [v for v in range(g.n) if v not in removed]
    perm = {v: i for i, v in enumerate(keep)}
    edges = [(perm[a], perm[b]) for a, b in g.edges
             if a in perm and b in perm]
    return brute_vc(Graph.from_edges(len(keep), edges), limit)


# ---------------------------------------------------------------------------
# layout-based dynamic programming
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DPReport:
    optimum: int
    max_live_states: int
    bag_count: int
    width_used: int


def _bag_steps(g: Graph, layout: LinearLayout):
    """Yield (vertex, back_edges, forget_after) per layout position, where
    back_edges lists already-introduced neighbors and forget_after lists
    vertices leaving the bag after this position."""
    decomp = layout_to_path_decomposition(g, layout)
    bags = decomp.bags
    adj = g.adjacency()
    steps = []
    for i, v in enumerate(layout.order):
        introduced_before = set(layout.order[:i])
        back = sorted(adj[v] & introduced_before)
        cur_bag = bags[i]
        nxt_bag = bags[i + 1] if i + 1 < len(bags) else frozenset()
        forget = sorted(cur_bag - nxt_bag)
        steps.append((v, back, forget))
    return steps, decomp


def _budget_check(width: int, states_per_vertex: int, itemsize: int) -> None:
    cells = states_per_vertex ** (width + 1)
    if cells * itemsize > MEMORY_BUDGET_BYTES:
        raise ResourceLimitError(
            f"DP table of {cells} states (width {width}) exceeds the "
            f"{MEMORY_BUDGET_BYTES >> 30} GiB budget")


def dp_is(g: Graph, layout: LinearLayout) -> DPReport:
    """Maximum independent set via 2-state DP over the layout's bags."""
    layout.validate(g)
    if g.n == 0:
        return DPReport(0, 1, 0, 0)
    steps, decomp = _bag_steps(g, layout)
    _budget_check(decomp.width, 2, 4)
    table = np.zeros((), dtype=np.int32)  # scalar: empty bag
    slots: list[int] = []  # slots[axis] = vertex
    max_live = 1
    for v, back, forget in steps:
        # introduce v on a new leading axis: 0 = out, 1 = in
        table = np.stack([table, table + 1], axis=0)
        slots.insert(0, v)
        # conflict edges: v in and neighbor in -> unreachable
        for u in back:
            ax = slots.index(u)
            t = np.moveaxis(table, (0, ax), (0, 1))
            t[1, 1] = _IS_NEG
        for u in forget:
            ax = slots.index(u)
            table = np.max(table, axis=ax)
            slots.pop(ax)
        max_live = max(max_live, max(1, int(np.count_nonzero(table > _IS_NEG // 2))))
    opt = int(table.max())
    return DPReport(opt, max_live, len(decomp.bags), decomp.width)


DENSE_DS_CELL_LIMIT = 5_000_000


def dp_ds(g: Graph, layout: LinearLayout) -> DPReport:
    """Minimum dominating set via 3-state DP over the layout's bags.

    Per-vertex states: 0 = in the set, 1 = out and dominated,
    2 = out and not yet dominated.  Forgetting rejects state 2, so
    isolated vertices are forced into the set.

    Uses a dense numpy table when 3^(max bag) is small and a sparse
    dict table otherwise (live states in structured graphs are far
    fewer than the worst case).
    """
    layout.validate(g)
    if g.n == 0:
        return DPReport(0, 1, 0, 0)
    steps, decomp = _bag_steps(g, layout)
    if 3 ** (decomp.width + 1) <= DENSE_DS_CELL_LIMIT:
        _budget_check(decomp.width, 3, 4)
        return _dp_ds_dense(steps, decomp)
    return _dp_ds_sparse(steps, decomp)


def _dp_ds_dense(steps, decomp) -> DPReport:
    table = np.zeros((), dtype=np.int32)
    slots: list[int] = []
    max_live = 1
    for v, back, forget in steps:
        in_part = table + 1
        blocked = np.full_like(table, _DS_INF)
        table = np.stack([in_part, blocked, table], axis=0)
        slots.insert(0, v)
        for u in back:
            ax = slots.index(u)
            t = np.moveaxis(table, (0, ax), (0, 1))
            # v in the set dominates u; u in the set dominates v
            t[0, 1] = np.minimum(t[0, 1], t[0, 2])
            t[0, 2] = _DS_INF
            t[1, 0] = np.minimum(t[1, 0], t[2, 0])
            t[2, 0] = _DS_INF
        for u in forget:
            ax = slots.index(u)
            t = np.moveaxis(table, ax, 0)
            table = np.minimum(t[0], t[1])  # reject "not yet dominated"
            slots.pop(ax)
        max_live = max(max_live, max(1, int(np.count_nonzero(table < _DS_INF // 2))))
    opt = int(table.min())
    if opt >= _DS_INF // 2:
        raise RuntimeError("DS DP found no feasible state")
    return DPReport(opt, max_live, len(decomp.bags), decomp.width)


SPARSE_DS_STATE_LIMIT = 20_000_000   # ~2 GiB of dict entries
_PRUNE_THRESHOLD = 20_000


def _prune_dominated(table: dict[int, int], nslots: int, pow3) -> dict[int, int]:
    """Drop states that are pointwise dominated: turning some vertex from
    "out, not yet dominated" into "out, dominated" can only relax future
    requirements, so a state with digit 2 at a slot is dead whenever its
    digit-1 twin is no more expensive."""
    out = {}
    for key, val in table.items():
        alive = True
        k = key
        for i in range(nslots):
            if k == 0:
                break
            if k % 3 == 2:
                twin = table.get(key - pow3[i])
                if twin is not None and twin <= val:
                    alive = False
                    break
            k //= 3
        if alive:
            out[key] = val
    return out


def _dp_ds_sparse(steps, decomp) -> DPReport:
    """Dict-backed variant; states are base-3 packed ints per bag slot."""
    table: dict[int, int] = {0: 0}
    slots: list[int] = []
    max_live = 1
    pow3 = [3 ** i for i in range(decomp.width + 2)]
    for v, back, forget in steps:
        # introduce v at digit position len(slots) (new highest digit)
        d = pow3[len(slots)]
        nxt: dict[int, int] = {}
        for key, val in table.items():
            nxt[key] = val + 1            # state 0: in the set
            nxt[key + 2 * d] = val        # state 2: out, undominated
        table = nxt
        slots.append(v)
        for u in back:
            du = pow3[slots.index(u)]
            dv = pow3[len(slots) - 1]
            nxt = {}
            for key, val in table.items():
                su = (key // du) % 3
                sv = (key // dv) % 3
                if sv == 0 and su == 2:
                    key = key - du        # u becomes dominated
                elif su == 0 and sv == 2:
                    key = key - dv
                cur = nxt.get(key)
                if cur is None or val < cur:
                    nxt[key] = val
            table = nxt
        for u in forget:
            i = slots.index(u)
            du = pow3[i]
            nxt = {}
            for key, val in table.items():
                s = (key // du) % 3
                if s == 2:
                    continue              # undominated at forget time
                # remove digit i, shifting higher digits down
                low = key % du
                high = key // (du * 3)
                key2 = low + high * du
                cur = nxt.get(key2)
                if cur is None or val < cur:
                    nxt[key2] = val
            table = nxt
            slots.pop(i)
        if len(table) > _PRUNE_THRESHOLD:
            table = _prune_dominated(table, len(slots), pow3)
        if len(table) > SPARSE_DS_STATE_LIMIT:
            raise ResourceLimitError(
                f"sparse DS table reached {len(table)} states "
                f"(width {decomp.width})")
        max_live = max(max_live, len(table))
    if not table:
        raise RuntimeError("DS DP found no feasible state")
    opt = min(table.values())
    return DPReport(opt, max_live, len(decomp.bags), decomp.width)


# ---------------------------------------------------------------------------
# heuristic layouts
# ---------------------------------------------------------------------------

def heuristic_layout(g: Graph, seed: int = 0, restarts: int = 3) -> LinearLayout:
    """Greedy min-incremental-cut insertion with 2-opt refinement.

    Deterministic for fixed (graph, seed).  No optimality guarantee; the
    result is a valid layout whose width the caller can measure.
    """
    import random
    if g.n == 0:
        return LinearLayout(())
    adj = g.adjacency_masks()
    deg = [adj[v].bit_count() for v in range(g.n)]
    rng = random.Random(seed)

    def greedy(start: int) -> list[int]:
        order = [start]
        placed = 1 << start
        cut = deg[start]
        remaining = set(range(g.n)) - {start}
        while remaining:
            best_v, best_key = -1, None
            for v in sorted(remaining):
                newcut = cut + deg[v] - 2 * (adj[v] & placed).bit_count()
                # prefer small new cut, then strong attachment to placed
                key = (newcut, -(adj[v] & placed).bit_count(), v)
                if best_key is None or key < best_key:
                    best_key, best_v = key, v
            order.append(best_v)
            placed |= 1 << best_v
            cut = best_key[0]
            remaining.discard(best_v)
        return order

    def width_of(order: list[int]) -> int:
        return cut_profile(g, LinearLayout(tuple(order))).max_width

    def two_opt(order: list[int]) -> list[int]:
        improved = True
        cur = width_of(order)
        order = list(order)
        while improved:
            improved = False
            for i in range(len(order) - 1):
                hi = min(len(order), i + 9)  # local window keeps this cheap
                for j in range(i + 1, hi):
                    order[i], order[j] = order[j], order[i]
                    w = width_of(order)
                    if w < cur:
                        cur = w
                        improved = True
                    else:
                        order[i], order[j] = order[j], order[i]
        return order

    starts = [min(range(g.n), key=lambda v: (deg[v], v))]
    for _ in range(max(0, restarts - 1)):
        starts.append(rng.randrange(g.n))
    best_order, best_w = None, None
    for s in starts:
        order = two_opt(greedy(s))
        w = width_of(order)
        if best_w is None or w < best_w:
            best_order, best_w = order, w
    return LinearLayout(tuple(best_order))
