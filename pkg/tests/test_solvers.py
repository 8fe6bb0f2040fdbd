import random

import pytest

from cutplanar.errors import OracleLimitError
from cutplanar.graph import Graph, LinearLayout, cut_profile, random_graph
from cutplanar.solvers import (brute_ds, brute_is, brute_vc, dp_ds, dp_is,
                               heuristic_layout)

from oracles import subsets_ds, subsets_is, subsets_vc


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


class TestBruteForce:
    def test_c5(self):
        g = cycle(5)
        assert brute_is(g) == 2
        assert brute_ds(g) == 2

    def test_star_ds(self):
        g = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
        assert brute_ds(g) == 1

    def test_kn(self):
        for n in (2, 4, 6):
            g = complete(n)
            assert brute_vc(g) == n - 1
            assert brute_is(g) == 1

    def test_size_limit(self):
        with pytest.raises(OracleLimitError):
            brute_is(Graph.from_edges(29, []), limit=28)

    def test_against_subset_enumeration(self):
        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(1, 9)
            g = random_graph(n, rng.choice([0.25, 0.5]), rng)
            assert brute_is(g) == subsets_is(g)
            assert brute_ds(g) == subsets_ds(g)
            assert brute_vc(g) == subsets_vc(g)

    def test_is_vc_complement(self):
        rng = random.Random(12)
        for _ in range(40):
            n = rng.randint(1, 10)
            g = random_graph(n, 0.4, rng)
            assert brute_is(g) + brute_vc(g) == n


class TestLayoutDP:
    def test_p4_is(self):
        g = Graph.from_edges(4, [(i, i + 1) for i in range(3)])
        assert dp_is(g, LinearLayout.identity(4)).optimum == 2

    def test_star_ds(self):
        g = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
        rep = dp_ds(g, heuristic_layout(g))
        assert rep.optimum == 1

    def test_isolated_vertices_must_self_dominate(self):
        g = Graph.from_edges(3, [(0, 1)])
        assert dp_ds(g, LinearLayout.identity(3)).optimum == 2

    def test_matches_brute_on_random_graphs(self):
        rng = random.Random(13)
        for _ in range(60):
            n = rng.randint(1, 10)
            g = random_graph(n, rng.choice([0.2, 0.4, 0.6]), rng)
            layout = heuristic_layout(g)
            ri, rd = dp_is(g, layout), dp_ds(g, layout)
            assert ri.optimum == brute_is(g)
            assert rd.optimum == brute_ds(g)
            assert ri.max_live_states <= 2 ** (ri.width_used + 1)
            assert rd.max_live_states <= 3 ** (rd.width_used + 1)

    def test_layout_invariance(self):
        rng = random.Random(14)
        for _ in range(15):
            n = rng.randint(2, 9)
            g = random_graph(n, 0.4, rng)
            vals_is, vals_ds = set(), set()
            for _ in range(4):
                order = list(range(n))
                rng.shuffle(order)
                layout = LinearLayout(tuple(order))
                vals_is.add(dp_is(g, layout).optimum)
                vals_ds.add(dp_ds(g, layout).optimum)
            assert len(vals_is) == 1 and len(vals_ds) == 1

    def test_edge_addition_monotonicity(self):
        rng = random.Random(15)
        for _ in range(20):
            n = rng.randint(3, 9)
            g = random_graph(n, 0.3, rng)
            non_edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                         if not g.has_edge(u, v)]
            if not non_edges:
                continue
            e = non_edges[rng.randrange(len(non_edges))]
            g2 = Graph.from_edges(n, list(g.edges) + [e])
            assert brute_is(g2) <= brute_is(g)
            assert brute_ds(g2) <= brute_ds(g)


class TestHeuristicLayout:
    def test_paths_get_width_one(self):
        for n in (2, 10, 25, 50):
            g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
            layout = heuristic_layout(g)
            assert cut_profile(g, layout).max_width == 1

    def test_edgeless(self):
        g = Graph.from_edges(5, [])
        assert cut_profile(g, heuristic_layout(g)).max_width == 0

    def test_deterministic(self):
        rng = random.Random(16)
        g = random_graph(9, 0.4, rng)
        assert heuristic_layout(g, seed=0) == heuristic_layout(g, seed=0)
