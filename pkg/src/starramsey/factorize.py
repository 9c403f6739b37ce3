"""Decompositions of complete graphs and the regular graphs built from them.

* ``one_factorization`` uses the round-robin (circle) schedule: vertex ``n-1``
  stays fixed and the remaining ``n-1`` vertices rotate.
* ``hamiltonian_decomposition`` uses the rotated zigzag (Walecki) layout:
  vertex ``n-1`` is the hub and the zigzag ``0, 1, -1, 2, -2, ...`` on
  ``Z_{n-1}`` is shifted once per cycle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParams, ParityInfeasible
from .types import Decomposition, Edge, Graph, norm_edge


@dataclass(frozen=True)
class CyclePlan:
    n: int
    cycles: tuple[tuple[int, ...], ...]

    def cycle_graph(self, idx: int) -> Graph:
        return Graph.cycle(self.cycles[idx], self.n)

    def to_decomposition(self) -> Decomposition:
        parts = tuple(self.cycle_graph(i) for i in range(len(self.cycles)))
        return Decomposition(Graph.complete(self.n), parts, complete=True)


def one_factorization(n: int) -> Decomposition:
    """Split ``K_n`` (``n`` even) into ``n - 1`` perfect matchings."""
    if n < 2 or n % 2:
        raise InvalidParams(f"one-factorization needs an even n >= 2, got {n}")
    m = n - 1
    parts = []
    for r in range(m):
        edges = {norm_edge(r, n - 1)}
        for i in range(1, n // 2):
            edges.add(norm_edge((r + i) % m, (r - i) % m))
        parts.append(Graph(n, frozenset(edges)))
    return Decomposition(Graph.complete(n), tuple(parts), complete=True)


def hamiltonian_decomposition(n: int) -> CyclePlan:
    """Split ``K_n`` (``n`` odd) into ``(n - 1) / 2`` Hamiltonian cycles."""
    if n < 3 or n % 2 == 0:
        raise InvalidParams(f"Hamiltonian decomposition needs an odd n >= 3, got {n}")
    m = n - 1
    offsets = [0]
    for i in range(1, m // 2 + 1):
        offsets.append(i)
        if len(offsets) < m:
            offsets.append(-i)
    cycles = tuple(tuple((j + off) % m for off in offsets) + (n - 1,) for j in range(m // 2))
    return CyclePlan(n, cycles)


def regular_graph(n: int, r: int) -> Graph:
    """An ``r``-regular graph on ``n`` vertices made of whole factors of ``K_n``."""
    if not 0 <= r <= max(n - 1, 0):
        raise InvalidParams(f"degree {r} out of range for n={n}")
    if n % 2 and r % 2:
        raise ParityInfeasible(f"no {r}-regular graph on {n} vertices: degree sum {n * r} is odd")
    edges: set[Edge] = set()
    if r == 0:
        return Graph(n)
    if n % 2 == 0:
        for part in one_factorization(n).parts[:r]:
            edges |= part.edges
    else:
        plan = hamiltonian_decomposition(n)
        for idx in range(r // 2):
            edges |= plan.cycle_graph(idx).edges
    return Graph(n, frozenset(edges))


def star_free_edge_bound(n: int, s: int) -> int:
    """Maximum edge count of a graph on ``n`` vertices with no ``K_{1,s}``."""
    if not 1 <= s <= n - 1:
        raise InvalidParams(f"need 1 <= s <= n-1, got s={s}, n={n}")
    twice = (s - 1) * n - (1 if n % 2 and s % 2 == 0 else 0)
    value, rem = divmod(twice, 2)
    if rem:
        raise AssertionError(f"odd doubled bound {twice} for n={n}, s={s}")
    return value


def max_star_free_graph(n: int, s: int) -> Graph:
    """A ``K_{1,s}``-free graph on ``n`` vertices attaining ``star_free_edge_bound``."""
    if not 1 <= s <= n - 1:
        raise InvalidParams(f"need 1 <= s <= n-1, got s={s}, n={n}")
    if n % 2 == 0 or s % 2 == 1:
        return regular_graph(n, s - 1)
    # n odd, s even: (s-2)-regular part plus a maximum matching of one more cycle
    plan = hamiltonian_decomposition(n)
    edges: set[Edge] = set()
    for idx in range((s - 2) // 2):
        edges |= plan.cycle_graph(idx).edges
    spare = plan.cycles[(s - 2) // 2]
    matching, _ = path_two_matchings(Graph.path(spare, n), start=spare[0])
    edges |= matching.edges
    return Graph(n, frozenset(edges))


def path_sequence(path: Graph, start: int | None = None) -> list[int]:
    """Vertex order of a Hamiltonian path, beginning at ``start`` (default: lower endpoint)."""
    n = path.n
    if n < 2 or path.e != n - 1:
        raise InvalidParams(f"not a Hamiltonian path: {path.e} edges on {n} vertices")
    ends = [v for v in range(n) if path.degrees[v] == 1]
    if len(ends) != 2 or path.max_degree > 2:
        raise InvalidParams("not a Hamiltonian path: degree pattern is wrong")
    if start is None:
        start = ends[0]
    elif start not in ends:
        raise InvalidParams(f"vertex {start} is not an endpoint of the path")
    seq, prev = [start], None
    while len(seq) < n:
        cur = seq[-1]
        nxt = [w for w in path.adjacency[cur] if w != prev]
        if not nxt:
            break
        seq.append(nxt[0])
        prev = cur
    if len(seq) != n:
        raise InvalidParams("not a Hamiltonian path: graph is disconnected")
    return seq


def path_two_matchings(path: Graph, start: int | None = None) -> tuple[Graph, Graph]:
    """Split a Hamiltonian path on an odd number of vertices into two maximum matchings.

    Walking from ``start``, edges alternate between the two matchings.  The
    first matching holds the edge at ``start`` and misses the far endpoint;
    the second misses ``start``.
    """
    if path.n % 2 == 0:
        raise InvalidParams(f"path must have an odd number of vertices, got {path.n}")
    seq = path_sequence(path, start)
    first = frozenset(norm_edge(seq[i], seq[i + 1]) for i in range(0, len(seq) - 1, 2))
    second = frozenset(norm_edge(seq[i], seq[i + 1]) for i in range(1, len(seq) - 1, 2))
    return Graph(path.n, first), Graph(path.n, second)


def open_cycle(cycle: tuple[int, ...], start: int, end: int) -> list[int]:
    """Drop the cycle edge ``{start, end}`` and list the remaining path from ``start`` to ``end``."""
    idx = cycle.index(start)
    rot = list(cycle[idx:] + cycle[:idx])
    if rot[-1] != end:
        rot = [rot[0]] + rot[1:][::-1]
    if rot[-1] != end:
        raise InvalidParams(f"{start}-{end} is not an edge of the cycle")
    return rot
