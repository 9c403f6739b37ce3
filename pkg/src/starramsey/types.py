"""Core value types: star tuples, simple graphs, edge colorings, decompositions.

Vertices are the integers ``0..n-1`` and colors are ``1..t``.  Every value is
immutable once built; constructions assemble plain sets and then freeze them
into these types.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

from .errors import InvalidParams

Edge = tuple[int, int]

DOT_PALETTE = (
    "red", "blue", "darkgreen", "orange", "purple",
    "brown", "magenta", "cyan", "gold", "gray",
)


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class StarParams:
    """Sizes ``m_1..m_t`` of the target stars ``K_{1,m_i}``."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(m) for m in self.sizes)
        object.__setattr__(self, "sizes", sizes)
        if len(sizes) < 2:
            raise InvalidParams(f"need at least two stars, got {len(sizes)}")
        bad = [m for m in sizes if m < 2]
        if bad:
            raise InvalidParams(f"star sizes must be at least 2, got {bad}")

    @classmethod
    def parse(cls, text: str) -> "StarParams":
        """Parse a comma list such as ``"2,2,3"``."""
        try:
            sizes = tuple(int(tok) for tok in text.split(",") if tok.strip())
        except ValueError as exc:
            raise InvalidParams(f"cannot parse star list {text!r}") from exc
        return cls(sizes)

    @property
    def t(self) -> int:
        return len(self.sizes)

    @property
    def k(self) -> int:
        """Number of even sizes."""
        return sum(1 for m in self.sizes if m % 2 == 0)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def canonical_order(self) -> tuple[int, ...]:
        """Indices of ``sizes`` rearranged as evens ascending, then odds ascending.

        Putting the largest even size last keeps the final even color away from
        size 2 whenever the tuple allows it.
        """
        return tuple(sorted(range(self.t), key=lambda i: (self.sizes[i] % 2, self.sizes[i], i)))

    def canonical(self) -> "StarParams":
        return StarParams(tuple(self.sizes[i] for i in self.canonical_order()))

    def __len__(self) -> int:
        return self.t

    def __iter__(self):
        return iter(self.sizes)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParams(f"vertex count must be non-negative, got {self.n}")
        normalized = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InvalidParams(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParams(f"edge {e} out of range for n={self.n}")
            normalized.add(norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def cycle(cls, seq: Sequence[int], n: int | None = None) -> "Graph":
        """Closed cycle through ``seq``; ``n`` defaults to ``max(seq) + 1``."""
        if n is None:
            n = max(seq) + 1
        m = len(seq)
        return cls(n, frozenset(norm_edge(seq[i], seq[(i + 1) % m]) for i in range(m)))

    @classmethod
    def path(cls, seq: Sequence[int], n: int | None = None) -> "Graph":
        if n is None:
            n = max(seq) + 1
        return cls(n, frozenset(norm_edge(a, b) for a, b in zip(seq, seq[1:])))

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset, ...]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise InvalidParams(f"vertex {v} out of range for n={self.n}")
        return self.degrees[v]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def is_regular(self, r: int | None = None) -> bool:
        if self.n == 0:
            return True
        first = self.degrees[0]
        return all(d == first for d in self.degrees) and (r is None or first == r)

    def union(self, other: "Graph") -> "Graph":
        return Graph(max(self.n, other.n), self.edges | other.edges)

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "Graph":
        return cls(int(data["n"]), frozenset(tuple(e) for e in data["edges"]))

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))


def degree(g: Graph, v: int) -> int:
    """Number of edges of ``g`` incident to ``v``."""
    return g.degree(v)


@dataclass(frozen=True)
class EdgeColoring:
    """A host graph with every edge assigned one of the colors ``1..t``."""

    host: Graph
    t: int
    assignment: Mapping[Edge, int]

    def __post_init__(self):
        if self.t < 1:
            raise InvalidParams(f"color count must be positive, got {self.t}")
        assignment = {}
        for e, c in self.assignment.items():
            e = norm_edge(*e)
            if e not in self.host.edges:
                raise InvalidParams(f"colored edge {e} is not in the host")
            if not 1 <= c <= self.t:
                raise InvalidParams(f"color {c} of edge {e} outside 1..{self.t}")
            assignment[e] = int(c)
        missing = self.host.edges - assignment.keys()
        if missing:
            raise InvalidParams(f"{len(missing)} host edges uncolored, e.g. {min(missing)}")
        object.__setattr__(self, "assignment", MappingProxyType(assignment))

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Iterable[Edge]]) -> "EdgeColoring":
        """Build from per-color edge sets; ``classes[0]`` is color 1."""
        assignment: dict[Edge, int] = {}
        for c, edges in enumerate(classes, start=1):
            for e in edges:
                e = norm_edge(*e)
                if e in assignment:
                    raise InvalidParams(f"edge {e} given colors {assignment[e]} and {c}")
                assignment[e] = c
        return cls(Graph(n, frozenset(assignment)), len(classes), assignment)

    @property
    def n(self) -> int:
        return self.host.n

    def color_class(self, i: int) -> Graph:
        if not 1 <= i <= self.t:
            raise InvalidParams(f"color {i} outside 1..{self.t}")
        return Graph(self.host.n, frozenset(e for e, c in self.assignment.items() if c == i))

    def color_classes(self) -> list[Graph]:
        return [self.color_class(i) for i in range(1, self.t + 1)]

    def relabel_colors(self, mapping: Mapping[int, int]) -> "EdgeColoring":
        return EdgeColoring(self.host, self.t, {e: mapping[c] for e, c in self.assignment.items()})

    def to_dict(self) -> dict:
        return {
            "n": self.host.n,
            "t": self.t,
            "edges": [[u, v, self.assignment[(u, v)]] for u, v in self.host.sorted_edges],
        }

    def to_json(self) -> str:
        """Canonical certificate text: edges sorted, ``u < v``, no trailing newline."""
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "EdgeColoring":
        n, t = int(data["n"]), int(data["t"])
        assignment = {}
        for row in data["edges"]:
            u, v, c = (int(x) for x in row)
            e = norm_edge(u, v)
            if e in assignment:
                raise InvalidParams(f"edge {e} listed twice")
            assignment[e] = c
        return cls(Graph(n, frozenset(assignment)), t, assignment)

    @classmethod
    def from_json(cls, text: str) -> "EdgeColoring":
        return cls.from_dict(json.loads(text))

    def to_dot(self, name: str = "coloring") -> str:
        lines = [f"graph {name} {{", "  node [shape=circle];"]
        lines.append("  " + " ".join(f"{v};" for v in range(self.host.n)))
        for i in range(1, self.t + 1):
            colour = DOT_PALETTE[(i - 1) % len(DOT_PALETTE)]
            lines.append(f"  subgraph color{i} {{")
            lines.append(f'    edge [color="{colour}", label="{i}"];')
            for u, v in self.color_class(i).sorted_edges:
                lines.append(f"    {u} -- {v};")
            lines.append("  }")
        lines.append("}")
        return "\n".join(lines) + "\n"


def color_class(c: EdgeColoring, i: int) -> Graph:
    """Subgraph on ``V(host)`` formed by the edges of color ``i``."""
    return c.color_class(i)


@dataclass(frozen=True)
class Decomposition:
    """Edge-disjoint subgraphs of ``host``; ``complete`` when they cover it exactly."""

    host: Graph
    parts: tuple[Graph, ...]
    complete: bool = False

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        seen: set[Edge] = set()
        for idx, part in enumerate(parts):
            if part.n != self.host.n:
                raise InvalidParams(f"part {idx} has {part.n} vertices, host has {self.host.n}")
            if part.edges & seen:
                raise InvalidParams(f"part {idx} shares edges with an earlier part")
            if not part.edges <= self.host.edges:
                raise InvalidParams(f"part {idx} uses edges outside the host")
            seen |= part.edges
        if self.complete and seen != self.host.edges:
            raise InvalidParams("parts marked complete but do not cover the host")

    def covered(self) -> frozenset:
        out: set[Edge] = set()
        for part in self.parts:
            out |= part.edges
        return frozenset(out)

    def to_dict(self) -> dict:
        return {
            "n": self.host.n,
            "complete": self.complete,
            "parts": [[list(e) for e in part.sorted_edges] for part in self.parts],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class Arrows:
    """Every t-coloring of the host contains a forbidden monochromatic star."""

    nodes_explored: int = 0


@dataclass(frozen=True)
class NotArrows:
    """A star-free coloring exists; ``certificate`` is one."""

    certificate: EdgeColoring
    nodes_explored: int = 0


ArrowVerdict = Union[Arrows, NotArrows]
