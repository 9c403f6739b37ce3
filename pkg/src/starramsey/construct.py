"""Explicit star-free colorings that certify the lower bounds.

Two families are built here:

* ``star_critical_witness``: ``K_N`` minus ``k/2`` edges at vertex 0, colored
  without any ``K_{1,m_i}`` in color ``i`` (``k >= 2`` even).
* ``regular_nonarrowing_witness``: a ``d``-regular host on ``n`` vertices,
  colored the same way, where ``d`` is the largest degree the parity branch
  allows.

Both start from a decomposition of ``K_n`` into Hamiltonian cycles (or
1-factors for even ``n``), hand whole cycles to colors, and open a few cycles
into paths whose two alternating matchings go to a pair of even colors.  All
index bookkeeping is done on the canonical order of the sizes (evens first);
returned colorings use the caller's color order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from .arrow import find_mono_star
from .errors import DegenerateBranch, InvalidParams, WitnessError
from .factorize import hamiltonian_decomposition, one_factorization, open_cycle, path_two_matchings
from .formulas import ramsey_stars
from .types import Edge, EdgeColoring, Graph, StarParams, norm_edge


class WitnessBranch(str, Enum):
    STAR_CRITICAL = "StarCritical"
    EVEN_N = "EvenN"
    ODD_N_K0 = "OddN_K0"
    ODD_N_ODD_K = "OddN_OddK"
    ODD_N_EVEN_K = "OddN_EvenK"


@dataclass(frozen=True)
class WitnessPlan:
    """Index bookkeeping for one construction, in canonical color order (colors 1..t).

    ``cycle_assignment[(i, j)]`` is the index of the Hamiltonian cycle (or, for
    even ``n``, of the 1-factor) serving as slot ``j`` of color ``i``.
    ``special_vertices[l-1]`` is ``u_l``.  ``color_order[i-1]`` is the
    caller's 0-based index of canonical color ``i``.
    """

    params: StarParams
    n: int
    branch: WitnessBranch
    degree: int | None
    cycle_assignment: dict = field(default_factory=dict)
    special_vertices: tuple[int, ...] = ()
    distinguished: int | None = None
    color_order: tuple[int, ...] = ()
    opened: tuple[tuple[int, int], ...] = ()


@dataclass
class AuditReport:
    max_degree: list[int]
    histograms: list[dict[int, int]]
    host_degrees: tuple[int, ...]
    host_regular: bool
    star_free: list[bool]
    violations: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return all(self.star_free)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "star_free": self.star_free,
            "max_degree": self.max_degree,
            "histograms": [{str(d): c for d, c in sorted(h.items())} for h in self.histograms],
            "host_regular": self.host_regular,
            "host_degree": self.host_degrees[0] if self.host_regular and self.host_degrees else None,
            "violations": [list(v) for v in self.violations],
        }


def audit_witness(c: EdgeColoring, p: StarParams) -> AuditReport:
    """Per-color degree statistics and star-freeness of a coloring."""
    if c.t != p.t:
        raise InvalidParams(f"coloring uses {c.t} colors but {p.t} stars were given")
    classes = c.color_classes()
    violations = [
        (v, i + 1)
        for i, g in enumerate(classes)
        for v in range(c.n)
        if g.degrees[v] >= p.sizes[i]
    ]
    assert (find_mono_star(c, p) is None) == (not violations)
    return AuditReport(
        max_degree=[g.max_degree for g in classes],
        histograms=[dict(Counter(g.degrees)) for g in classes],
        host_degrees=c.host.degrees,
        host_regular=c.host.is_regular(),
        star_free=[g.max_degree < m for g, m in zip(classes, p.sizes)],
        violations=violations,
    )


def _slot_range(lo: int, hi: int) -> range:
    return range(lo, hi + 1)


def _assign_slots(slots: list[tuple[int, int]], available: int) -> dict:
    if len(slots) > available:
        raise WitnessError(f"plan needs {len(slots)} cycles, only {available} exist")
    return {slot: idx for idx, slot in enumerate(slots)}


def _pick_disjoint_edges(cycles: list[tuple[int, ...]]) -> list[tuple[int, int]]:
    """One edge ``(a, b)``, ``a < b``, from each cycle, all endpoints distinct; lexicographically least."""
    used: set[int] = set()
    chosen: list[tuple[int, int]] = []
    options = [sorted(Graph.cycle(c).edges) for c in cycles]

    def pick(i: int) -> bool:
        if i == len(options):
            return True
        for a, b in options[i]:
            if a in used or b in used:
                continue
            used.update((a, b))
            chosen.append((a, b))
            if pick(i + 1):
                return True
            chosen.pop()
            used.difference_update((a, b))
        return False

    if not pick(0):
        raise DegenerateBranch("no vertex-disjoint choice of opened cycle edges exists")
    return chosen


def plan_star_critical(p: StarParams) -> WitnessPlan:
    """Bookkeeping for ``star_critical_witness``: vertex 0 loses the edges to ``u_1..u_{k/2}``."""
    canon = p.canonical()
    k, t = canon.k, canon.t
    if k < 2 or k % 2:
        raise InvalidParams(f"star-critical construction needs an even k >= 2, got k={k}")
    n = ramsey_stars(canon)
    m = (None,) + canon.sizes  # 1-based
    half = k // 2
    slots = []
    for i in range(1, t + 1):
        if i <= half:
            js = _slot_range(1, m[i] // 2)
        elif i <= k:
            js = _slot_range(2, m[i] // 2)
        else:
            js = _slot_range(1, (m[i] - 1) // 2)
        slots.extend((i, j) for j in js)
    cycles = hamiltonian_decomposition(n).cycles
    assignment = _assign_slots(slots, len(cycles))
    v = 0
    special = []
    for i in range(1, half + 1):
        cyc = cycles[assignment[(i, 1)]]
        pos = cyc.index(v)
        special.append(min(cyc[pos - 1], cyc[(pos + 1) % len(cyc)]))
    # path P_{i,1} runs from v to u_i; its first matching covers v and goes to color i
    opened = tuple((v, u) for u in special)
    return WitnessPlan(
        params=canon,
        n=n,
        branch=WitnessBranch.STAR_CRITICAL,
        degree=None,
        cycle_assignment=assignment,
        special_vertices=tuple(special),
        distinguished=v,
        color_order=p.canonical_order(),
        opened=opened,
    )


def plan_regular(p: StarParams, n: int) -> WitnessPlan:
    """Bookkeeping for ``regular_nonarrowing_witness`` on ``n >= r(...)`` vertices."""
    canon = p.canonical()
    k, t = canon.k, canon.t
    if n < ramsey_stars(canon):
        raise InvalidParams(f"n={n} is below r{canon.sizes}={ramsey_stars(canon)}")
    m = (None,) + canon.sizes
    excess = canon.total - t
    order = p.canonical_order()

    if n % 2 == 0:
        slots = [(i, j) for i in range(1, t + 1) for j in _slot_range(1, m[i] - 1)]
        assignment = _assign_slots(slots, n - 1)
        return WitnessPlan(canon, n, WitnessBranch.EVEN_N, excess, assignment, color_order=order)

    cycles = hamiltonian_decomposition(n).cycles
    if k == 0:
        slots = [(i, j) for i in range(1, t + 1) for j in _slot_range(1, (m[i] - 1) // 2)]
        assignment = _assign_slots(slots, len(cycles))
        return WitnessPlan(canon, n, WitnessBranch.ODD_N_K0, excess, assignment, color_order=order)

    if k % 2:
        half = (k - 1) // 2
        slots = []
        for i in range(1, t + 1):
            if i <= half:
                js = _slot_range(1, m[i] // 2)
            elif i <= k:
                js = _slot_range(2, m[i] // 2)
            else:
                js = _slot_range(1, (m[i] - 1) // 2)
            slots.extend((i, j) for j in js)
        assignment = _assign_slots(slots, len(cycles))
        pairs = _pick_disjoint_edges([cycles[assignment[(l, 1)]] for l in range(1, half + 1)])
        special = [0] * (k - 1)
        for l, (a, b) in enumerate(pairs, start=1):
            special[l - 1], special[k - l - 1] = a, b
        # P_{l,1} runs from u_{k-l} to u_l: first matching misses u_l and goes to color l
        opened = tuple((special[k - l - 1], special[l - 1]) for l in range(1, half + 1))
        return WitnessPlan(
            canon, n, WitnessBranch.ODD_N_ODD_K, excess - 1, assignment,
            special_vertices=tuple(special), color_order=order, opened=opened,
        )

    half = k // 2
    if m[k] == 2:
        if excess - 2 == 0:
            # every even size is 2 and there are no odd sizes: the 0-regular host works
            return WitnessPlan(canon, n, WitnessBranch.ODD_N_EVEN_K, 0, {}, color_order=order)
        raise DegenerateBranch(
            f"all even sizes of {canon.sizes} equal 2, so the last even color has no cycle slots"
        )
    slots = []
    for i in range(1, t + 1):
        if i <= half:
            js = _slot_range(1, m[i] // 2)
        elif i < k:
            js = _slot_range(2, m[i] // 2)
        elif i == k:
            js = _slot_range(3, m[i] // 2)
        else:
            js = _slot_range(1, (m[i] - 1) // 2)
        slots.extend((i, j) for j in js)
    assignment = _assign_slots(slots, len(cycles))
    pairs = _pick_disjoint_edges([cycles[assignment[(l, 1)]] for l in range(1, half + 1)])
    special = [0] * k
    for l, (a, b) in enumerate(pairs, start=1):
        special[l - 1], special[l + half - 1] = a, b
    # P_{l,1} runs from u_{l+k/2} to u_l: first matching misses u_l and goes to color l
    opened = tuple((special[l + half - 1], special[l - 1]) for l in range(1, half + 1))
    return WitnessPlan(
        canon, n, WitnessBranch.ODD_N_EVEN_K, excess - 2, assignment,
        special_vertices=tuple(special), color_order=order, opened=opened,
    )


def _assemble(plan: WitnessPlan) -> list[set[Edge]]:
    """Per-color edge sets (canonical order, index 0 is color 1)."""
    p, n = plan.params, plan.n
    t, k = p.t, p.k
    classes: list[set[Edge]] = [set() for _ in range(t)]
    if plan.branch is WitnessBranch.EVEN_N:
        factors = one_factorization(n).parts
        for (i, _), idx in plan.cycle_assignment.items():
            classes[i - 1] |= factors[idx].edges
        return classes

    cycles = hamiltonian_decomposition(n).cycles if n >= 3 else ()
    opened_slots = {}
    if plan.branch is WitnessBranch.STAR_CRITICAL:
        half = k // 2
        opened_slots = {l: (l, l + half) for l in range(1, half + 1)}
    elif plan.branch is WitnessBranch.ODD_N_ODD_K:
        opened_slots = {l: (l, k - l) for l in range(1, (k - 1) // 2 + 1)}
    elif plan.branch is WitnessBranch.ODD_N_EVEN_K:
        opened_slots = {l: (l, l + k // 2) for l in range(1, len(plan.opened) + 1)}

    for (i, j), idx in plan.cycle_assignment.items():
        if j == 1 and i in opened_slots:
            continue
        classes[i - 1] |= Graph.cycle(cycles[idx], n).edges

    for l, (start, end) in enumerate(plan.opened, start=1):
        cyc = cycles[plan.cycle_assignment[(l, 1)]]
        seq = open_cycle(cyc, start, end)
        first, second = path_two_matchings(Graph.path(seq, n), start=start)
        own, partner = opened_slots[l]
        classes[own - 1] |= first.edges
        classes[partner - 1] |= second.edges
        if plan.branch in (WitnessBranch.ODD_N_ODD_K, WitnessBranch.ODD_N_EVEN_K):
            classes[k - 1].add(norm_edge(start, end))
    return classes


def expected_class_degrees(plan: WitnessPlan) -> list[list[int]]:
    """Degree of every vertex in every color class, as the constructions promise."""
    p, n = plan.params, plan.n
    t, k = p.t, p.k
    m = (None,) + p.sizes
    u = (None,) + plan.special_vertices
    out = [[m[i] - 1] * n for i in range(1, t + 1)]
    if plan.branch in (WitnessBranch.EVEN_N, WitnessBranch.ODD_N_K0):
        return out
    if plan.branch is WitnessBranch.STAR_CRITICAL:
        for i in range(1, k // 2 + 1):
            out[i - 1][u[i]] = m[i] - 2
        for i in range(k // 2 + 1, k + 1):
            out[i - 1][plan.distinguished] = m[i] - 2
        return out
    if plan.branch is WitnessBranch.ODD_N_ODD_K:
        for i in range(1, k):
            out[i - 1][u[i]] = m[i] - 2
        out[k - 1] = [m[k] - 2] * n
        for j in range(1, k):
            out[k - 1][u[j]] = m[k] - 1
        return out
    if not plan.special_vertices:
        return [[0] * n for _ in range(t)]
    for i in range(1, k):
        out[i - 1][u[i]] = m[i] - 2
    out[k - 1] = [m[k] - 3] * n
    for j in range(1, k):
        out[k - 1][u[j]] = m[k] - 2
    return out


def _self_audit(plan: WitnessPlan, classes: list[set[Edge]]) -> EdgeColoring:
    n = plan.n
    canon_coloring = EdgeColoring.from_classes(n, classes)
    report = audit_witness(canon_coloring, plan.params)
    if not report.ok:
        raise WitnessError(f"construction for {plan.params.sizes}, n={n} has violations {report.violations[:5]}")
    expected = expected_class_degrees(plan)
    for i, g in enumerate(canon_coloring.color_classes()):
        if list(g.degrees) != expected[i]:
            raise WitnessError(f"color {i + 1} degrees {g.degrees} differ from the promised {expected[i]}")
    host = canon_coloring.host
    if plan.branch is WitnessBranch.STAR_CRITICAL:
        v = plan.distinguished
        removed = {norm_edge(v, w) for w in plan.special_vertices}
        if host.edges != Graph.complete(n).edges - removed or len(removed) != plan.params.k // 2:
            raise WitnessError("host is not K_N minus a star at the distinguished vertex")
    elif not host.is_regular(plan.degree) or host.n != n:
        raise WitnessError(f"host is not {plan.degree}-regular: degrees {host.degrees}")
    # canonical color i is the caller's color color_order[i-1] + 1
    mapping = {i + 1: plan.color_order[i] + 1 for i in range(plan.params.t)}
    return canon_coloring.relabel_colors(mapping)


def build(plan: WitnessPlan) -> EdgeColoring:
    """Assemble and audit the coloring described by ``plan``."""
    return _self_audit(plan, _assemble(plan))


def star_critical_witness(p: StarParams) -> EdgeColoring:
    """Star-free coloring of ``K_N`` minus ``K_{1,k/2}``, for ``k >= 2`` even."""
    return build(plan_star_critical(p))


def regular_nonarrowing_witness(p: StarParams, n: int) -> EdgeColoring:
    """Star-free coloring of a regular host of the largest degree the parities allow."""
    return build(plan_regular(p, n))
