from itertools import product
from pathlib import Path

import pytest

from starramsey.arrow import find_mono_star
from starramsey.construct import (
    WitnessBranch,
    audit_witness,
    build,
    expected_class_degrees,
    plan_regular,
    plan_star_critical,
    regular_nonarrowing_witness,
    star_critical_witness,
)
from starramsey.errors import DegenerateBranch, InvalidParams
from starramsey.formulas import ramsey_stars, regular_threshold_g, star_critical_stars
from starramsey.types import EdgeColoring, Graph, StarParams

P = StarParams
GOLDEN = Path(__file__).parent / "golden"


def good_coloring_exists(g, p):
    edges = sorted(g.edges)
    for colors in product(range(1, p.t + 1), repeat=len(edges)):
        c = EdgeColoring(g, p.t, dict(zip(edges, colors)))
        if find_mono_star(c, p) is None:
            return True
    return False


def grid():
    for sizes in product(range(2, 7), repeat=2):
        yield sizes
    for sizes in product(range(2, 6), repeat=3):
        yield sizes
    yield (2, 2, 2, 2)
    yield (2, 4, 3, 6)


class TestStarCriticalWitness:
    def test_two_two(self):
        c = star_critical_witness(P((2, 2)))
        assert c.n == 3 and c.host.degree(0) == 1
        assert c.host.e == 2
        assert good_coloring_exists(c.host, P((2, 2)))
        assert not good_coloring_exists(Graph.complete(3), P((2, 2)))

    def test_two_two_three(self):
        p = P((2, 2, 3))
        c = star_critical_witness(p)
        assert c.n == 5 and c.host.degree(0) == 3 == star_critical_stars(p) - 1
        assert audit_witness(c, p).ok

    def test_four_twos(self):
        c = star_critical_witness(P((2, 2, 2, 2)))
        assert c.n == 5 and c.host.degree(0) == 2
        assert c.host.e == 10 - 2

    def test_caller_color_order_respected(self):
        # sizes out of canonical order: color 2 is the only odd one
        p = P((4, 3, 2))
        c = star_critical_witness(p)
        rep = audit_witness(c, p)
        assert rep.ok
        assert rep.max_degree == [3, 2, 1]

    @pytest.mark.parametrize("sizes", [(3, 3), (2, 3), (2, 2, 2), (2, 3, 5)])
    def test_needs_even_k(self, sizes):
        with pytest.raises(InvalidParams):
            star_critical_witness(P(sizes))

    def test_plan_invariants(self):
        for sizes in grid():
            p = P(sizes)
            if p.k < 2 or p.k % 2:
                continue
            plan = plan_star_critical(p)
            n = ramsey_stars(p)
            assert plan.n == n and plan.branch is WitnessBranch.STAR_CRITICAL
            assert len(set(plan.special_vertices)) == p.k // 2
            assert plan.distinguished not in plan.special_vertices
            assert len(set(plan.cycle_assignment.values())) == len(plan.cycle_assignment) <= (n - 1) // 2
            c = build(plan)
            assert c.host.degree(plan.distinguished) == n - 1 - p.k // 2
            assert audit_witness(c, p).ok

    def test_golden(self):
        text = star_critical_witness(P((2, 2, 3))).to_json()
        assert text + "\n" == (GOLDEN / "star_critical_2_2_3.json").read_text()


class TestRegularWitness:
    def test_three_three_six(self):
        c = regular_nonarrowing_witness(P((3, 3)), 6)
        assert c.host.is_regular(4)
        assert all(g.is_regular(2) for g in c.color_classes())

    def test_two_three_five(self):
        c = regular_nonarrowing_witness(P((2, 3)), 5)
        assert c.host.is_regular(2) and c.host.e == 5
        assert set(c.assignment.values()) == {2}

    def test_two_two_five_is_empty(self):
        c = regular_nonarrowing_witness(P((2, 2)), 5)
        assert c.host == Graph.empty(5)

    def test_degenerate_branch(self):
        with pytest.raises(DegenerateBranch):
            plan_regular(P((2, 2, 3)), 7)

    def test_below_ramsey_number(self):
        with pytest.raises(InvalidParams):
            plan_regular(P((3, 3)), 5)

    @pytest.mark.parametrize(
        "sizes, n, branch",
        [
            ((3, 3), 6, WitnessBranch.EVEN_N),
            ((3, 5), 9, WitnessBranch.ODD_N_K0),
            ((2, 3), 5, WitnessBranch.ODD_N_ODD_K),
            ((2, 4), 5, WitnessBranch.ODD_N_EVEN_K),
        ],
    )
    def test_branches(self, sizes, n, branch):
        assert plan_regular(P(sizes), n).branch is branch

    def test_degree_is_largest_below_threshold(self):
        # the host does not arrow, so its degree is the largest feasible one below the threshold
        checked = 0
        for sizes in grid():
            p = P(sizes)
            r = ramsey_stars(p)
            for n in (r, r + 1, r + 2):
                try:
                    plan = plan_regular(p, n)
                except DegenerateBranch:
                    continue
                c = build(plan)
                assert c.host.is_regular(plan.degree)
                if plan.special_vertices or plan.branch is not WitnessBranch.ODD_N_EVEN_K:
                    g = regular_threshold_g(p, n).value
                    assert plan.degree == max(d for d in range(g) if n * d % 2 == 0)
                assert audit_witness(c, p).ok
                checked += 1
        assert checked > 250

    def test_class_degree_patterns(self):
        p = P((2, 4, 3))
        plan = plan_regular(p, 7)
        c = build(plan)
        # build relabels to caller order; compare in canonical order instead
        canon = [c.color_class(plan.color_order[i] + 1).degrees for i in range(p.t)]
        assert [list(d) for d in canon] == expected_class_degrees(plan)

    def test_special_vertices_distinct(self):
        for sizes, n in [((2, 4, 3), 7), ((4, 4), 7), ((2, 2, 4, 4), 11), ((2, 4, 5), 9)]:
            plan = plan_regular(P(sizes), n)
            assert len(set(plan.special_vertices)) == len(plan.special_vertices) > 0
            ends = [v for e in plan.opened for v in e]
            assert len(set(ends)) == len(ends)

    def test_golden(self):
        text = regular_nonarrowing_witness(P((2, 4, 3)), 7).to_json()
        assert text + "\n" == (GOLDEN / "regular_2_4_3_n7.json").read_text()


class TestAudit:
    def test_all_one_color_triangle(self):
        k3 = Graph.complete(3)
        c = EdgeColoring(k3, 2, {e: 1 for e in k3.edges})
        rep = audit_witness(c, P((2, 2)))
        assert not rep.ok
        assert rep.star_free == [False, True]
        assert rep.violations == [(0, 1), (1, 1), (2, 1)]
        assert rep.histograms[0] == {2: 3}
        assert rep.to_dict()["host_degree"] == 2

    def test_witness_report(self):
        rep = audit_witness(regular_nonarrowing_witness(P((3, 3)), 6), P((3, 3)))
        assert rep.ok and rep.host_regular and rep.max_degree == [2, 2]
        assert rep.to_dict()["histograms"] == [{"2": 6}, {"2": 6}]

    def test_color_count_mismatch(self):
        with pytest.raises(InvalidParams):
            audit_witness(regular_nonarrowing_witness(P((3, 3)), 6), P((3, 3, 3)))
