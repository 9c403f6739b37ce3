"""Exact arrowing decisions for star targets and the brute-force oracles built on them.

A coloring avoids every ``K_{1,m_i}`` in color ``i`` exactly when each vertex
has fewer than ``m_i`` edges of color ``i``, so the search only has to track
per-vertex, per-color degree counters.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .errors import BudgetExhausted, ConsistencyError, InvalidParams, NotFound, RefusedScale
from .formulas import ramsey_stars
from .types import Arrows, ArrowVerdict, Edge, EdgeColoring, Graph, NotArrows, StarParams

log = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 10**8
DEFAULT_MAX_SECONDS = 60.0
ENUMERATION_LIMIT = 7
_CLOCK_EVERY = 4096


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = DEFAULT_MAX_NODES
    max_seconds: float = DEFAULT_MAX_SECONDS

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise InvalidParams(f"budget values must be positive, got {self}")

    @classmethod
    def from_env(cls, environ=None) -> "SearchBudget":
        """Defaults, overridable by ``STARRAMSEY_BUDGET_NODES`` / ``STARRAMSEY_BUDGET_SECONDS``."""
        environ = os.environ if environ is None else environ
        nodes = environ.get("STARRAMSEY_BUDGET_NODES")
        seconds = environ.get("STARRAMSEY_BUDGET_SECONDS")
        return cls(
            int(nodes) if nodes else DEFAULT_MAX_NODES,
            float(seconds) if seconds else DEFAULT_MAX_SECONDS,
        )


class _Meter:
    """Shared node/time accounting for one top-level search call."""

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.start = time.monotonic()
        self.deadline = self.start + budget.max_seconds

    def elapsed(self) -> float:
        return time.monotonic() - self.start

    def exhausted(self, reason: str) -> BudgetExhausted:
        return BudgetExhausted(self.nodes, self.elapsed(), reason)


def find_mono_star(c: EdgeColoring, p: StarParams) -> tuple[int, int] | None:
    """First ``(vertex, color)`` whose color-``i`` degree reaches ``m_i``, or ``None``."""
    if c.t != p.t:
        raise InvalidParams(f"coloring uses {c.t} colors but {p.t} stars were given")
    counts = [[0] * p.t for _ in range(c.host.n)]
    for (u, v), col in c.assignment.items():
        counts[u][col - 1] += 1
        counts[v][col - 1] += 1
    for v in range(c.host.n):
        row = counts[v]
        for i, m in enumerate(p.sizes):
            if row[i] >= m:
                return v, i + 1
    return None


def _edge_order(g: Graph) -> list[Edge]:
    deg = g.degrees
    return sorted(g.edges, key=lambda e: (-min(deg[e[0]], deg[e[1]]), e))


def _twins_before(sizes: Sequence[int]) -> list[tuple[int, ...]]:
    return [tuple(j for j in range(i) if sizes[j] == sizes[i]) for i in range(len(sizes))]


class _Backtracker:
    """Depth-first edge coloring with degree-counter pruning.

    Colors of equal size are interchangeable, so a fresh color is only tried
    when every earlier color of the same size is already in use.
    """

    def __init__(self, n: int, edges: Sequence[Edge], sizes: Sequence[int], meter: _Meter):
        self.n = n
        self.edges = list(edges)
        self.caps = [m - 1 for m in sizes]
        self.t = len(sizes)
        self.twins = _twins_before(sizes)
        self.meter = meter
        self.counts = [[0] * self.t for _ in range(n)]
        self.used = [0] * self.t
        self.colors = [0] * len(self.edges)

    def candidates(self, i: int) -> Iterator[int]:
        u, v = self.edges[i]
        cu, cv, caps, used = self.counts[u], self.counts[v], self.caps, self.used
        for c in range(self.t):
            if cu[c] >= caps[c] or cv[c] >= caps[c]:
                continue
            if used[c] == 0 and any(used[j] == 0 for j in self.twins[c]):
                continue
            yield c

    def assign(self, i: int, c: int) -> None:
        u, v = self.edges[i]
        self.counts[u][c] += 1
        self.counts[v][c] += 1
        self.used[c] += 1
        self.colors[i] = c

    def unassign(self, i: int) -> None:
        c = self.colors[i]
        u, v = self.edges[i]
        self.counts[u][c] -= 1
        self.counts[v][c] -= 1
        self.used[c] -= 1

    def tick(self) -> None:
        meter = self.meter
        meter.nodes += 1
        if meter.nodes > meter.budget.max_nodes:
            raise meter.exhausted("nodes")
        if meter.nodes % _CLOCK_EVERY == 0 and time.monotonic() > meter.deadline:
            raise meter.exhausted("seconds")

    def run(self, depth: int = 0) -> bool:
        if depth == len(self.edges):
            return True
        for c in self.candidates(depth):
            self.tick()
            self.assign(depth, c)
            if self.run(depth + 1):
                return True
            self.unassign(depth)
        return False

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        """All consistent color prefixes of the first ``depth`` edges, in search order."""
        out: list[tuple[int, ...]] = []

        def walk(i: int) -> None:
            if i == depth:
                out.append(tuple(self.colors[:depth]))
                return
            for c in self.candidates(i):
                self.assign(i, c)
                walk(i + 1)
                self.unassign(i)

        walk(0)
        return out

    def certificate(self) -> EdgeColoring:
        assignment = {e: c + 1 for e, c in zip(self.edges, self.colors)}
        return EdgeColoring(Graph(self.n, frozenset(self.edges)), self.t, assignment)


def _pigeonhole_forced(g: Graph, p: StarParams) -> bool:
    capacity = sum(m - 1 for m in p.sizes)
    return g.max_degree > capacity


def _decide(g: Graph, p: StarParams, meter: _Meter) -> ArrowVerdict:
    if _pigeonhole_forced(g, p):
        return Arrows(nodes_explored=0)
    before = meter.nodes
    bt = _Backtracker(g.n, _edge_order(g), p.sizes, meter)
    if bt.run():
        return _checked(NotArrows(bt.certificate(), meter.nodes - before), p)
    return Arrows(nodes_explored=meter.nodes - before)


def _checked(verdict: NotArrows, p: StarParams) -> NotArrows:
    hit = find_mono_star(verdict.certificate, p)
    if hit is not None:
        raise ConsistencyError(f"search emitted a certificate with a monochromatic star at {hit}")
    return verdict


def _subtree(args) -> tuple[list[int] | None, int]:
    n, edges, sizes, prefix, budget, deadline = args
    meter = _Meter(budget)
    meter.deadline = min(meter.deadline, deadline)
    bt = _Backtracker(n, edges, sizes, meter)
    for i, c in enumerate(prefix):
        bt.assign(i, c)
    found = bt.run(len(prefix))
    return (list(bt.colors) if found else None), meter.nodes


def _decide_parallel(g: Graph, p: StarParams, meter: _Meter, workers: int) -> ArrowVerdict:
    if _pigeonhole_forced(g, p):
        return Arrows(nodes_explored=0)
    edges = _edge_order(g)
    splitter = _Backtracker(g.n, edges, p.sizes, meter)
    depth, prefixes = 0, [()]
    while depth < len(edges) and len(prefixes) < 4 * workers:
        depth += 1
        prefixes = splitter.prefixes(depth)
    if not prefixes:
        return Arrows(nodes_explored=0)
    tasks = [(g.n, edges, p.sizes, pre, meter.budget, meter.deadline) for pre in prefixes]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_subtree, tasks))
    # results come back in prefix order, which is the serial search order
    total = sum(nodes for _, nodes in results)
    meter.nodes += total
    if meter.nodes > meter.budget.max_nodes:
        raise meter.exhausted("nodes")
    for colors, _ in results:
        if colors is not None:
            cert = EdgeColoring(Graph(g.n, frozenset(edges)), p.t, {e: c + 1 for e, c in zip(edges, colors)})
            return _checked(NotArrows(cert, total), p)
    return Arrows(nodes_explored=total)


def arrows_decision(g: Graph, p: StarParams, b: SearchBudget | None = None, *, workers: int = 1) -> ArrowVerdict:
    """Decide whether every ``t``-coloring of ``g`` has a ``K_{1,m_i}`` in some color ``i``.

    Raises ``BudgetExhausted`` instead of returning a verdict when the budget
    runs out.  ``workers > 1`` splits the first edges' color choices across
    processes; the certificate is the same one the serial search would find.
    """
    meter = _Meter(b or SearchBudget())
    if workers > 1:
        return _decide_parallel(g, p, meter, workers)
    return _decide(g, p, meter)


def ramsey_search(p: StarParams, n_max: int, b: SearchBudget | None = None, *, trace: list | None = None) -> int:
    """Least ``N <= n_max`` with ``K_N`` arrowing, found by exhaustive search."""
    meter = _Meter(b or SearchBudget())
    for n in range(1, n_max + 1):
        verdict = _decide(Graph.complete(n), p, meter)
        log.info("ramsey search: K_%d %s (%d nodes so far)", n, type(verdict).__name__, meter.nodes)
        if trace is not None:
            trace.append((n, verdict))
        if isinstance(verdict, Arrows):
            return n
    raise NotFound(f"no complete graph on at most {n_max} vertices arrows {p.sizes}")


def star_deleted_host(n: int, kept: int, center: int = 0) -> Graph:
    """``K_n`` minus a star ``K_{1,n-1-kept}`` at ``center``; the center keeps its ``kept`` lowest neighbors."""
    others = [w for w in range(n) if w != center]
    dropped = {tuple(sorted((center, w))) for w in others[kept:]}
    return Graph(n, frozenset(e for e in combinations(range(n), 2) if e not in dropped))


def star_critical_search(
    p: StarParams,
    b: SearchBudget | None = None,
    *,
    center: int = 0,
    trace: list | None = None,
) -> int:
    """Least ``k`` such that ``K_N - K_{1,N-1-k}`` arrows, with ``N = r(...)``.

    Every intermediate ``(k, verdict)`` is appended to ``trace`` when given.
    """
    n = ramsey_stars(p)
    meter = _Meter(b or SearchBudget())
    for kept in range(n):
        verdict = _decide(star_deleted_host(n, kept, center), p, meter)
        log.info("star-critical search: k=%d %s (%d nodes so far)", kept, type(verdict).__name__, meter.nodes)
        if trace is not None:
            trace.append((kept, verdict))
        if isinstance(verdict, Arrows):
            return kept
    raise NotFound(f"K_{n} itself does not arrow {p.sizes}")


def regular_graphs(n: int, r: int) -> Iterator[Graph]:
    """Every labeled ``r``-regular graph on ``n`` vertices, each exactly once."""
    if r < 0 or r > n - 1 or (n * r) % 2:
        return
    deg = [0] * n
    edges: list[Edge] = []

    def fill(v: int) -> Iterator[Graph]:
        if v == n:
            yield Graph(n, frozenset(edges))
            return
        need = r - deg[v]
        pool = [w for w in range(v + 1, n) if deg[w] < r]
        if need > len(pool):
            return
        for chosen in combinations(pool, need):
            for w in chosen:
                deg[w] += 1
                edges.append((v, w))
            deg[v] = r
            yield from fill(v + 1)
            deg[v] = r - need
            for w in chosen:
                deg[w] -= 1
                edges.pop()

    yield from fill(0)


def canonical_form(g: Graph) -> tuple[Edge, ...]:
    """Lexicographically least relabeled edge list over all vertex permutations (small n only)."""
    best = None
    for perm in permutations(range(g.n)):
        cand = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges))
        if best is None or cand < best:
            best = cand
    return best


def _all_arrow(graphs, p: StarParams, meter: _Meter, dedup: bool) -> tuple[NotArrows | None, int]:
    """First non-arrowing graph's verdict (or ``None``) and the number of graphs decided."""
    seen = set()
    count = 0
    for g in graphs:
        if dedup:
            key = canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
        count += 1
        verdict = _decide(g, p, meter)
        if isinstance(verdict, NotArrows):
            return verdict, count
    return None, count


def regular_ramsey_search(
    p: StarParams,
    b: SearchBudget | None = None,
    *,
    dedup: bool = False,
    trace: list | None = None,
) -> int:
    """Least realizable degree ``r`` such that every ``r'``-regular graph on ``N`` vertices with ``r' >= r`` arrows.

    Degrees with no regular graph on ``N`` vertices are skipped rather than
    counted as vacuously arrowing.
    """
    n = ramsey_stars(p)
    if n > ENUMERATION_LIMIT:
        raise RefusedScale(f"N={n} exceeds the enumeration limit {ENUMERATION_LIMIT}")
    meter = _Meter(b or SearchBudget())
    answer = None
    for r in range(n - 1, -1, -1):
        if (n * r) % 2:
            continue
        blocker, count = _all_arrow(regular_graphs(n, r), p, meter, dedup)
        log.info("regular search: r=%d, %d graphs decided, all arrow=%s", r, count, blocker is None)
        if trace is not None:
            trace.append((r, blocker or Arrows(nodes_explored=meter.nodes)))
        if blocker is not None:
            break
        answer = r
    if answer is None:
        raise NotFound(f"K_{n} does not arrow {p.sizes}")
    return answer


def graphs_with_min_degree(n: int, d: int, *, exact: bool = False) -> Iterator[Graph]:
    """Labeled graphs on ``n`` vertices with minimum degree ``>= d`` (``== d`` when ``exact``).

    Enumerated through complements, whose maximum degree is at most ``n-1-d``.
    """
    cap = n - 1 - d
    if cap < 0:
        return
    all_edges = list(combinations(range(n), 2))
    full = frozenset(all_edges)
    deg = [0] * n
    missing: list[Edge] = []

    def walk(i: int) -> Iterator[Graph]:
        if i == len(all_edges):
            if not exact or max(deg, default=0) == cap:
                yield Graph(n, full.difference(missing))
            return
        u, v = all_edges[i]
        yield from walk(i + 1)
        if deg[u] < cap and deg[v] < cap:
            deg[u] += 1
            deg[v] += 1
            missing.append((u, v))
            yield from walk(i + 1)
            missing.pop()
            deg[u] -= 1
            deg[v] -= 1

    yield from walk(0)


def min_degree_search(p: StarParams, n: int, b: SearchBudget | None = None, *, trace: list | None = None) -> int:
    """Least ``d`` such that every graph on ``n`` vertices with minimum degree ``>= d`` arrows."""
    if n > ENUMERATION_LIMIT:
        raise RefusedScale(f"n={n} exceeds the enumeration limit {ENUMERATION_LIMIT}")
    if n < 1:
        raise InvalidParams(f"need at least one vertex, got n={n}")
    meter = _Meter(b or SearchBudget())
    for d in range(n - 1, -1, -1):
        blocker, count = _all_arrow(graphs_with_min_degree(n, d, exact=True), p, meter, dedup=False)
        log.info("min-degree search: delta=%d, %d graphs decided, all arrow=%s", d, count, blocker is None)
        if trace is not None:
            trace.append((d, blocker or Arrows(nodes_explored=meter.nodes)))
        if blocker is not None:
            return d + 1
    raise ConsistencyError("the empty graph cannot arrow")
