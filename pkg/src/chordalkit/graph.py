"""Immutable undirected graphs, orderings, and complement views.

Vertices carry external string names but every algorithm works on dense
integer indices 0..n-1; positions in an ordering are 1-based, matching the
convention that position n is chosen first by the searches.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import (
    DisconnectedGraphError,
    EmptyInputError,
    ParseError,
    SelfLoopError,
)

VertexSet = frozenset[int]


def canon(vertices: Iterable[int]) -> tuple[int, ...]:
    """Canonical sorted-tuple form of a vertex set (for stable output)."""
    return tuple(sorted(vertices))


class Graph:
    """Simple undirected graph: no self-loops, no parallel edges, immutable."""

    __slots__ = ("names", "adj", "n", "m", "_index")

    def __init__(self, names: Sequence[str], edges: Iterable[tuple[int, int]]):
        if len(set(names)) != len(names):
            raise ParseError("duplicate vertex names")
        self.names: tuple[str, ...] = tuple(names)
        self.n = len(self.names)
        adj: list[set[int]] = [set() for _ in range(self.n)]
        m = 0
        for u, v in edges:
            if u == v:
                raise SelfLoopError(f"self-loop at {self.names[u]!r}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ParseError(f"edge ({u},{v}) out of range")
            if v not in adj[u]:
                adj[u].add(v)
                adj[v].add(u)
                m += 1
        self.adj: tuple[VertexSet, ...] = tuple(frozenset(s) for s in adj)
        self.m = m
        self._index = {name: i for i, name in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ParseError(f"unknown vertex name {name!r}") from None

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def name_edges(self) -> list[tuple[str, str]]:
        return [(self.names[u], self.names[v]) for u, v in sorted(self.edges())]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.names == other.names and self.adj == other.adj

    def __hash__(self):  # pragma: no cover - not used as dict key
        return hash((self.names, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(pairs: Iterable[tuple[str, str]]) -> Graph:
    """Build a graph from named edge pairs; first appearance fixes indices."""
    pairs = list(pairs)
    if not pairs:
        raise EmptyInputError("empty edge list")
    names: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for a, b in pairs:
        if a == b:
            raise SelfLoopError(f"self-loop at {a!r}")
        for name in (a, b):
            if name not in index:
                index[name] = len(names)
                names.append(name)
        edges.append((index[a], index[b]))
    return Graph(names, edges)


def from_vertices(names: Sequence[str], pairs: Iterable[tuple[str, str]] = ()) -> Graph:
    """Build a graph from an explicit vertex list (allows isolated vertices)."""
    g = Graph(names, [])
    index = {name: i for i, name in enumerate(names)}
    edges = [(index[a], index[b]) for a, b in pairs]
    return Graph(names, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format: one edge per line, two
    whitespace-separated names, '#' starts a comment, blank lines ignored."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected two vertex names, got {len(tokens)}")
        pairs.append((tokens[0], tokens[1]))
    return from_edge_list(pairs)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


class ComplementView:
    """Adjacency view of the complement graph. Never materializes edges:
    (u, v) is adjacent in the view exactly when u != v and the base graph
    has no edge uv."""

    __slots__ = ("base",)

    def __init__(self, base: Graph):
        self.base = base

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def names(self) -> tuple[str, ...]:
        return self.base.names

    def index(self, name: str) -> int:
        return self.base.index(name)

    def adjacent(self, u: int, v: int) -> bool:
        return u != v and not self.base.adjacent(u, v)

    def neighbors(self, v: int) -> VertexSet:
        # one row on demand; the full edge set is never built
        return frozenset(u for u in range(self.base.n) if u != v and not self.base.adjacent(u, v))

    def degree(self, v: int) -> int:
        return self.base.n - 1 - self.base.degree(v)

    def vertices(self) -> range:
        return range(self.base.n)


def complement_view(g: Graph) -> ComplementView:
    return ComplementView(g)


def materialize_complement(g: Graph) -> Graph:
    """Concrete complement graph (same names, same index order)."""
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.adjacent(u, v)]
    return Graph(g.names, edges)


def add_edges(g: Graph, extra: Iterable[tuple[int, int]]) -> Graph:
    """New graph with the given extra edges added."""
    return Graph(g.names, list(g.edges()) + list(extra))


class Ordering:
    """Bijection between positions 1..n and vertices, with O(1) inverse."""

    __slots__ = ("seq", "pos")

    def __init__(self, seq: Sequence[int]):
        self.seq: tuple[int, ...] = tuple(seq)
        n = len(self.seq)
        pos = [0] * n
        seen = [False] * n
        for i, v in enumerate(self.seq, start=1):
            if not (0 <= v < n) or seen[v]:
                raise ParseError("ordering is not a bijection onto the vertex set")
            seen[v] = True
            pos[v] = i
        self.pos: tuple[int, ...] = tuple(pos)

    def __len__(self) -> int:
        return len(self.seq)

    def vertex_at(self, i: int) -> int:
        """Vertex at position i (1-based)."""
        return self.seq[i - 1]

    def position_of(self, v: int) -> int:
        return self.pos[v]

    def names(self, g: Graph | ComplementView) -> list[str]:
        return [g.names[v] for v in self.seq]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ordering):
            return NotImplemented
        return self.seq == other.seq

    def __repr__(self) -> str:
        return f"Ordering({list(self.seq)})"


def ordering_from_names(g: Graph | ComplementView, names: Sequence[str]) -> Ordering:
    if len(names) != g.n:
        raise ParseError(f"ordering names {len(names)} vertices, graph has {g.n}")
    return Ordering([g.index(name) for name in names])


def higher_neighborhood(
    g: Graph | ComplementView, alpha: Ordering, y: int, i: int, closed: bool = False
) -> VertexSet:
    """Neighbors of y placed after position i; with i = position(y) this is
    the higher neighborhood of y. The closed variant adds y itself."""
    out = {z for z in g.neighbors(y) if alpha.position_of(z) > i}
    if closed:
        out.add(y)
    return frozenset(out)


def induced_subgraph(g: Graph, sub: Iterable[int]) -> Graph:
    """Subgraph induced by the given vertices (kept in index order)."""
    keep = canon(sub)
    remap = {v: i for i, v in enumerate(keep)}
    names = [g.names[v] for v in keep]
    edges = [(remap[u], remap[v]) for u, v in g.edges() if u in remap and v in remap]
    return Graph(names, edges)


def is_connected(g: Graph | ComplementView) -> bool:
    """True iff every vertex is reachable from vertex 0 (single vertex: True)."""
    if g.n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def complement_is_connected(g: Graph) -> bool:
    """Connectivity of the complement without materializing it: BFS keeping
    the unvisited set, so total work stays near-linear in the base graph."""
    if g.n == 0:
        return False
    unvisited = set(range(1, g.n))
    frontier = [0]
    while frontier:
        u = frontier.pop()
        reached = unvisited - g.adj[u]
        unvisited -= reached
        frontier.extend(reached)
    return not unvisited


def require_connected(g: Graph | ComplementView) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")
