import itertools
import random
from fractions import Fraction

import pytest

from cutplanar.drawing import (build_arc_drawing, element_order, to_svg,
                               vertical_cut_edges)
from cutplanar.errors import InvalidLayoutError
from cutplanar.graph import Graph, LinearLayout, cut_profile, random_graph


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


class TestCrossings:
    def test_k4_single_crossing(self):
        d = build_arc_drawing(complete(4), LinearLayout.identity(4))
        assert len(d.crossings) == 1
        c = d.crossings[0]
        assert c.x == Fraction(5, 2)
        assert set(c.edges) == {(0, 2), (1, 3)}

    def test_nested_edges_do_not_cross(self):
        g = Graph.from_edges(4, [(0, 3), (1, 2)])
        d = build_arc_drawing(g, LinearLayout.identity(4))
        assert d.crossings == ()

    def test_path_dfs_layout_no_crossings(self):
        g = Graph.from_edges(6, [(i, i + 1) for i in range(5)])
        d = build_arc_drawing(g, LinearLayout.identity(6))
        assert d.crossings == ()

    def test_kn_crossing_count_is_choose4(self):
        for n in range(4, 8):
            d = build_arc_drawing(complete(n), LinearLayout.identity(n))
            expect = len(list(itertools.combinations(range(n), 4)))
            assert len(d.crossings) == expect

    def test_crossing_count_matches_pair_scan(self):
        rng = random.Random(1)
        for _ in range(20):
            n = rng.randint(2, 9)
            g = random_graph(n, 0.5, rng)
            order = list(range(n))
            rng.shuffle(order)
            layout = LinearLayout(tuple(order))
            pos = layout.position()
            brute = 0
            for e1, e2 in itertools.combinations(sorted(g.edges), 2):
                a, b = sorted((pos[e1[0]], pos[e1[1]]))
                c, dd = sorted((pos[e2[0]], pos[e2[1]]))
                if a < c < b < dd or c < a < dd < b:
                    brute += 1
            d = build_arc_drawing(g, layout)
            assert len(d.crossings) == brute

    def test_crossing_x_strictly_inside_inner_interval(self):
        rng = random.Random(2)
        for _ in range(15):
            n = rng.randint(4, 9)
            g = random_graph(n, 0.5, rng)
            d = build_arc_drawing(g, LinearLayout.identity(n))
            pos = d.position()
            for c in d.crossings:
                (a, b), (cc, dd) = c.edges
                inner_lo = max(pos[a], pos[cc])
                inner_hi = min(pos[b], pos[dd])
                assert inner_lo < c.x < inner_hi


class TestElementOrder:
    def test_k4(self):
        d = build_arc_drawing(complete(4), LinearLayout.identity(4))
        elems = element_order(d)
        kinds = [(e.kind, e.vertex) for e in elems]
        assert kinds == [("vertex", 0), ("vertex", 1), ("crossing", None),
                         ("vertex", 2), ("vertex", 3)]

    def test_crossing_free_equals_layout(self):
        g = Graph.from_edges(5, [(i, i + 1) for i in range(4)])
        d = build_arc_drawing(g, LinearLayout.identity(5))
        assert [e.vertex for e in element_order(d)] == list(range(5))

    def test_equal_x_ties_are_deterministic(self):
        # edges (1,4)x(3,6) and (2,4)x(3,5) in position space both cross
        # at x = 3.5; the tiebreak must order them reproducibly.
        g = Graph.from_edges(6, [(0, 3), (2, 5), (1, 3), (2, 4)])
        d = build_arc_drawing(g, LinearLayout.identity(6))
        tied = [c for c in d.crossings if c.x == Fraction(7, 2)]
        assert len(tied) == 2
        runs = [element_order(build_arc_drawing(g, LinearLayout.identity(6)))
                for _ in range(3)]
        seqs = [[(e.kind, e.vertex, e.crossing.edges if e.crossing else None)
                 for e in r] for r in runs]
        assert seqs[0] == seqs[1] == seqs[2]
        xs = [e.crossing for e in runs[0]
              if e.kind == "crossing" and e.crossing.x == Fraction(7, 2)]
        # lexicographic tiebreak on normalized position keys
        assert xs[0].edges == ((0, 3), (2, 5))
        assert xs[1].edges == ((1, 3), (2, 4))

    def test_restriction_to_vertices_is_layout_order(self):
        rng = random.Random(3)
        for _ in range(10):
            n = rng.randint(2, 9)
            g = random_graph(n, 0.6, rng)
            order = list(range(n))
            rng.shuffle(order)
            d = build_arc_drawing(g, LinearLayout(tuple(order)))
            verts = [e.vertex for e in element_order(d) if e.kind == "vertex"]
            assert verts == order


class TestVerticalCuts:
    def test_path(self):
        g = Graph.from_edges(4, [(i, i + 1) for i in range(3)])
        d = build_arc_drawing(g, LinearLayout.identity(4))
        assert vertical_cut_edges(d, Fraction(3, 2)) == {(0, 1)}

    def test_k4_middle(self):
        d = build_arc_drawing(complete(4), LinearLayout.identity(4))
        assert len(vertical_cut_edges(d, Fraction(5, 2))) == 4

    def test_left_of_everything(self):
        d = build_arc_drawing(complete(4), LinearLayout.identity(4))
        assert vertical_cut_edges(d, Fraction(1, 2)) == set()

    def test_vertex_position_rejected(self):
        d = build_arc_drawing(complete(4), LinearLayout.identity(4))
        with pytest.raises(InvalidLayoutError):
            vertical_cut_edges(d, 2)

    def test_cut_near_crossings_bounded_by_width(self):
        rng = random.Random(4)
        eps = Fraction(1, 1_000_000)
        for _ in range(15):
            n = rng.randint(3, 9)
            g = random_graph(n, 0.5, rng)
            layout = LinearLayout.identity(n)
            d = build_arc_drawing(g, layout)
            width = cut_profile(g, layout).max_width
            for c in d.crossings:
                for x0 in (c.x - eps, c.x + eps):
                    assert len(vertical_cut_edges(d, x0)) <= width

    def test_per_edge_crossing_sequence_monotone(self):
        rng = random.Random(5)
        for _ in range(10):
            n = rng.randint(4, 9)
            g = random_graph(n, 0.6, rng)
            d = build_arc_drawing(g, LinearLayout.identity(n))
            elems = element_order(d)
            rank = {id(e.crossing): i for i, e in enumerate(elems)
                    if e.kind == "crossing"}
            per_edge = {}
            for c in d.crossings:
                for e in c.edges:
                    per_edge.setdefault(e, []).append(c)
            for e, cs in per_edge.items():
                xs = [c.x for c in sorted(cs, key=lambda c: rank[id(c)])]
                assert xs == sorted(xs)


class TestSvg:
    def test_deterministic_and_wellformed(self):
        d = build_arc_drawing(complete(4), LinearLayout.identity(4))
        s1, s2 = to_svg(d), to_svg(d)
        assert s1 == s2
        assert s1.startswith("<svg") and s1.rstrip().endswith("</svg>")
        assert s1.count("<circle") == 4 + 1  # 4 vertices + 1 crossing marker

    def test_p3_contents(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        s = to_svg(build_arc_drawing(g, LinearLayout.identity(3)))
        assert s.count("<path") == 2
        assert s.count("<circle") == 3  # no crossing markers
