from itertools import combinations

import pytest

from starramsey.errors import InvalidParams, ParityInfeasible
from starramsey.factorize import (
    hamiltonian_decomposition,
    max_star_free_graph,
    one_factorization,
    open_cycle,
    path_two_matchings,
    regular_graph,
    star_free_edge_bound,
)
from starramsey.types import Graph


def edge_multiset_count(n, parts):
    count = {e: 0 for e in combinations(range(n), 2)}
    for part in parts:
        for e in part:
            count[e] += 1
    return count


def brute_max_edges(n, cap):
    """Largest edge set on n vertices with every degree <= cap, by exhaustive search."""
    pairs = list(combinations(range(n), 2))
    best = 0

    def walk(i, deg, size):
        nonlocal best
        if size + (len(pairs) - i) <= best:
            return
        if i == len(pairs):
            best = max(best, size)
            return
        u, v = pairs[i]
        if deg[u] < cap and deg[v] < cap:
            deg[u] += 1
            deg[v] += 1
            walk(i + 1, deg, size + 1)
            deg[u] -= 1
            deg[v] -= 1
        walk(i + 1, deg, size)

    walk(0, [0] * n, 0)
    return best


class TestOneFactorization:
    def test_n2(self):
        dec = one_factorization(2)
        assert [p.edges for p in dec.parts] == [frozenset({(0, 1)})]

    @pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
    def test_partition(self, n):
        dec = one_factorization(n)
        assert len(dec.parts) == n - 1
        assert all(p.e == n // 2 and p.is_regular(1) for p in dec.parts)
        counts = edge_multiset_count(n, [p.edges for p in dec.parts])
        assert set(counts.values()) == {1}
        assert dec.complete

    @pytest.mark.parametrize("n", [0, 3, 7])
    def test_rejects_odd(self, n):
        with pytest.raises(InvalidParams):
            one_factorization(n)

    def test_deterministic(self):
        assert one_factorization(8) == one_factorization(8)


class TestHamiltonianDecomposition:
    def test_n3(self):
        assert hamiltonian_decomposition(3).cycles == ((0, 1, 2),)

    @pytest.mark.parametrize("n", [5, 7, 9, 11, 13])
    def test_partition(self, n):
        plan = hamiltonian_decomposition(n)
        assert len(plan.cycles) == (n - 1) // 2
        parts = []
        for cyc in plan.cycles:
            assert sorted(cyc) == list(range(n))
            parts.append({tuple(sorted((cyc[i], cyc[(i + 1) % n]))) for i in range(n)})
            assert len(parts[-1]) == n
        counts = edge_multiset_count(n, parts)
        assert set(counts.values()) == {1}

    def test_each_cycle_is_connected_2_regular(self):
        plan = hamiltonian_decomposition(9)
        for idx in range(len(plan.cycles)):
            g = plan.cycle_graph(idx)
            assert g.is_regular(2)
            seen, stack = {0}, [0]
            while stack:
                for w in g.adjacency[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            assert len(seen) == 9
        plan.to_decomposition()

    @pytest.mark.parametrize("n", [1, 4, 10])
    def test_rejects(self, n):
        with pytest.raises(InvalidParams):
            hamiltonian_decomposition(n)


class TestRegularGraph:
    def test_parity_infeasible(self):
        with pytest.raises(ParityInfeasible):
            regular_graph(5, 3)

    def test_cycle(self):
        g = regular_graph(5, 2)
        assert g.is_regular(2) and g.e == 5
        assert g.edges == Graph.cycle(hamiltonian_decomposition(5).cycles[0]).edges

    def test_cubic_on_six(self):
        g = regular_graph(6, 3)
        assert g.degrees == (3,) * 6

    @pytest.mark.parametrize("n", range(1, 12))
    def test_every_feasible_degree(self, n):
        for r in range(n):
            if n % 2 and r % 2:
                with pytest.raises(ParityInfeasible):
                    regular_graph(n, r)
            else:
                assert regular_graph(n, r).is_regular(r)

    def test_out_of_range(self):
        with pytest.raises(InvalidParams):
            regular_graph(4, 4)


class TestStarFree:
    @pytest.mark.parametrize("n, s, expected", [(5, 2, 2), (5, 4, 7), (6, 3, 6), (5, 3, 5), (4, 2, 2)])
    def test_bound_examples(self, n, s, expected):
        assert star_free_edge_bound(n, s) == expected

    @pytest.mark.parametrize("n, s, edges", [(5, 2, 2), (5, 3, 5), (4, 2, 2)])
    def test_graph_examples(self, n, s, edges):
        g = max_star_free_graph(n, s)
        assert g.e == edges
        assert g.max_degree <= s - 1

    def test_odd_n_even_s_shape(self):
        g = max_star_free_graph(7, 4)
        assert sorted(g.degrees) == [2] + [3] * 6

    @pytest.mark.parametrize("n", range(2, 10))
    def test_construction_meets_bound(self, n):
        for s in range(1, n):
            g = max_star_free_graph(n, s)
            assert g.max_degree <= s - 1
            assert g.e == star_free_edge_bound(n, s)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_bound_is_exact_maximum(self, n):
        for s in range(1, n):
            assert brute_max_edges(n, s - 1) == star_free_edge_bound(n, s)

    def test_range_checks(self):
        with pytest.raises(InvalidParams):
            star_free_edge_bound(4, 4)
        with pytest.raises(InvalidParams):
            max_star_free_graph(4, 0)


def is_matching(edges):
    verts = [v for e in edges for v in e]
    return len(verts) == len(set(verts))


class TestPathMatchings:
    def test_three(self):
        a, b = path_two_matchings(Graph.path([0, 1, 2]))
        assert a.edges == {(0, 1)} and b.edges == {(1, 2)}

    def test_five(self):
        a, b = path_two_matchings(Graph.path([0, 1, 2, 3, 4]))
        assert a.edges == {(0, 1), (2, 3)}
        assert b.edges == {(1, 2), (3, 4)}

    def test_seven_maximum(self):
        seq = [3, 0, 6, 1, 5, 2, 4]
        path = Graph.path(seq)
        a, b = path_two_matchings(path, start=3)
        # brute-force maximum matching size of the path
        best = max(
            size
            for size in range(len(path.edges) + 1)
            for sub in combinations(sorted(path.edges), size)
            if is_matching(sub)
        )
        assert best == 3
        assert a.e == b.e == 3 and is_matching(a.edges) and is_matching(b.edges)
        assert a.edges | b.edges == path.edges and not a.edges & b.edges
        covered_a = {v for e in a.edges for v in e}
        covered_b = {v for e in b.edges for v in e}
        assert set(range(7)) - covered_a == {4}
        assert set(range(7)) - covered_b == {3}

    def test_orientation(self):
        a, b = path_two_matchings(Graph.path([0, 1, 2, 3, 4]), start=4)
        assert a.edges == {(3, 4), (1, 2)}

    @pytest.mark.parametrize(
        "graph",
        [
            Graph.path([0, 1, 2, 3]),
            Graph.cycle([0, 1, 2]),
            Graph(5, frozenset({(0, 1), (1, 2), (3, 4)})),
            Graph(5, frozenset({(0, 1), (0, 2), (0, 3), (0, 4)})),
        ],
    )
    def test_rejects_non_paths(self, graph):
        with pytest.raises(InvalidParams):
            path_two_matchings(graph)

    def test_start_must_be_endpoint(self):
        with pytest.raises(InvalidParams):
            path_two_matchings(Graph.path([0, 1, 2]), start=1)

    def test_open_cycle(self):
        assert open_cycle((0, 1, 2, 3, 4), 0, 1) == [0, 4, 3, 2, 1]
        assert open_cycle((0, 1, 2, 3, 4), 0, 4) == [0, 1, 2, 3, 4]
        with pytest.raises(InvalidParams):
            open_cycle((0, 1, 2, 3, 4), 0, 2)
