import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from starramsey.errors import InvalidParams
from starramsey.types import Decomposition, EdgeColoring, Graph, StarParams, color_class, degree

GOLDEN = Path(__file__).parent / "golden"


@st.composite
def colorings(draw, max_n=8, max_t=4):
    n = draw(st.integers(0, max_n))
    t = draw(st.integers(1, max_t))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    colors = draw(st.lists(st.integers(1, t), min_size=len(edges), max_size=len(edges)))
    return EdgeColoring(Graph(n, frozenset(edges)), t, dict(zip(edges, colors)))


class TestStarParams:
    def test_derived_counts(self):
        p = StarParams((3, 2, 5, 4))
        assert p.t == 4
        assert p.k == 2
        assert p.total == 14

    def test_canonical_puts_evens_first(self):
        p = StarParams((3, 4, 5, 2))
        assert p.canonical().sizes == (2, 4, 3, 5)
        assert [p.sizes[i] for i in p.canonical_order()] == [2, 4, 3, 5]

    @pytest.mark.parametrize("sizes", [(2,), (), (1, 3), (2, 0)])
    def test_rejects_bad_sizes(self, sizes):
        with pytest.raises(InvalidParams):
            StarParams(sizes)

    def test_parse(self):
        assert StarParams.parse("2,2,3").sizes == (2, 2, 3)
        with pytest.raises(InvalidParams):
            StarParams.parse("2,x")


class TestGraph:
    def test_degree_examples(self):
        assert degree(Graph.complete(3), 0) == 2
        assert degree(Graph.empty(4), 2) == 0
        assert degree(Graph.cycle(range(5)), 3) == 2

    def test_degree_out_of_range(self):
        with pytest.raises(InvalidParams):
            degree(Graph.complete(3), 3)

    def test_rejects_loops_and_out_of_range(self):
        with pytest.raises(InvalidParams):
            Graph(3, frozenset({(1, 1)}))
        with pytest.raises(InvalidParams):
            Graph(3, frozenset({(0, 3)}))

    def test_parallel_edges_collapse(self):
        g = Graph(3, frozenset({(0, 1), (1, 0)}))
        assert g.e == 1

    def test_extremes(self):
        g = Graph(4, frozenset({(0, 1), (0, 2), (0, 3)}))
        assert (g.max_degree, g.min_degree) == (3, 1)
        assert not g.is_regular()
        assert Graph.complete(4).is_regular(3)

    @given(st.integers(0, 8), st.data())
    def test_json_round_trip(self, n, data):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        g = Graph(n, frozenset(edges))
        text = g.to_json()
        assert Graph.from_json(text) == g
        assert Graph.from_json(text).to_json() == text


class TestEdgeColoring:
    def test_color_class_examples(self):
        k3 = Graph.complete(3)
        c = EdgeColoring(k3, 2, {e: 1 for e in k3.edges})
        assert color_class(c, 1) == k3
        assert color_class(c, 2) == Graph.empty(3)

        c4 = EdgeColoring.from_classes(4, [[(0, 1), (2, 3)], [(1, 2), (0, 3)]])
        assert color_class(c4, 1).edges == {(0, 1), (2, 3)}
        assert color_class(c4, 1).is_regular(1)

    def test_color_out_of_range(self):
        c = EdgeColoring.from_classes(3, [[(0, 1)], []])
        with pytest.raises(InvalidParams):
            c.color_class(3)
        with pytest.raises(InvalidParams):
            c.color_class(0)

    def test_must_cover_host(self):
        with pytest.raises(InvalidParams):
            EdgeColoring(Graph.complete(3), 2, {(0, 1): 1})
        with pytest.raises(InvalidParams):
            EdgeColoring(Graph.complete(2), 2, {(0, 1): 3})

    def test_assignment_is_read_only(self):
        c = EdgeColoring.from_classes(3, [[(0, 1)], [(1, 2)]])
        with pytest.raises(TypeError):
            c.assignment[(0, 1)] = 2

    @given(colorings())
    def test_class_sizes_sum_to_host(self, c):
        assert sum(g.e for g in c.color_classes()) == c.host.e
        union = set()
        for g in c.color_classes():
            union |= g.edges
        assert union == c.host.edges

    @given(colorings())
    def test_certificate_round_trip(self, c):
        text = c.to_json()
        back = EdgeColoring.from_json(text)
        assert back.to_json() == text
        assert dict(back.assignment) == dict(c.assignment)

    def test_canonical_form_is_sorted(self):
        c = EdgeColoring.from_classes(4, [[(2, 3), (1, 0)], [(3, 0)]])
        assert json.loads(c.to_json()) == {"n": 4, "t": 2, "edges": [[0, 1, 1], [0, 3, 2], [2, 3, 1]]}

    def test_golden_certificate(self):
        c = EdgeColoring.from_classes(4, [[(0, 1), (2, 3)], [(1, 2), (0, 3)]])
        assert c.to_json() + "\n" == (GOLDEN / "c4_alternating.json").read_text()

    def test_parse_rejects_duplicates(self):
        with pytest.raises(InvalidParams):
            EdgeColoring.from_json('{"n": 3, "t": 2, "edges": [[0, 1, 1], [1, 0, 2]]}')

    def test_dot_has_one_subgraph_per_color(self):
        c = EdgeColoring.from_classes(3, [[(0, 1)], [(1, 2)], []])
        dot = c.to_dot()
        assert dot.count("subgraph color") == 3
        assert 'color="red"' in dot and "0 -- 1;" in dot


class TestDecomposition:
    def test_complete_partition(self):
        host = Graph.complete(4)
        parts = (
            Graph(4, frozenset({(0, 1), (2, 3)})),
            Graph(4, frozenset({(0, 2), (1, 3)})),
            Graph(4, frozenset({(0, 3), (1, 2)})),
        )
        dec = Decomposition(host, parts, complete=True)
        assert sum(p.e for p in dec.parts) == host.e
        assert dec.covered() == host.edges

    def test_overlap_rejected(self):
        host = Graph.complete(3)
        with pytest.raises(InvalidParams):
            Decomposition(host, (Graph(3, frozenset({(0, 1)})), Graph(3, frozenset({(0, 1)}))))

    def test_incomplete_flag(self):
        host = Graph.complete(3)
        with pytest.raises(InvalidParams):
            Decomposition(host, (Graph(3, frozenset({(0, 1)})),), complete=True)
        Decomposition(host, (Graph(3, frozenset({(0, 1)})),), complete=False)

    def test_json(self):
        dec = Decomposition(Graph.complete(3), (Graph.complete(3),), complete=True)
        assert json.loads(dec.to_json()) == {"n": 3, "complete": True, "parts": [[[0, 1], [0, 2], [1, 2]]]}
