"""Immutable simple undirected graphs with bitset adjacency, plus the
binary operators (join, corona, Cartesian product) used to assemble the
cycle-derived families this package studies.

Vertices are dense integers 0..n-1.  Operators return new graphs; nothing
mutates after construction, so graphs can be shared freely between
concurrent solver jobs.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

HUB = "hub"
INNER_CYCLE = "inner_cycle"
OUTER_CYCLE = "outer_cycle"
PENDANT = "pendant"

ROLE_KINDS = (HUB, INNER_CYCLE, OUTER_CYCLE, PENDANT)


class VertexRole(NamedTuple):
    """Structural role of a vertex in a generated family.

    `index` is the 1-based position on the vertex's own ring (0 for hubs),
    so role annotations line up with the usual v_i / u_i / w_i naming.
    """

    kind: str
    index: int


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    `adj[v]` is an int bitmask of the neighbours of v.  `family` optionally
    records (family kind, cycle parameter) for generated graphs, and
    `roles` optionally annotates every vertex with a VertexRole.
    """

    __slots__ = ("n", "edges", "adj", "family", "roles")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        family: tuple[str, int] | None = None,
        roles: tuple[VertexRole, ...] | None = None,
    ):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        seen = set()
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                continue
            seen.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if roles is not None and len(roles) != n:
            raise ValueError("roles must annotate every vertex")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "roles", roles)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __repr__(self):
        tag = f" {self.family[0]}:{self.family[1]}" if self.family else ""
        return f"<Graph{tag} n={self.n} m={self.m}>"

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        if self.n == 0:
            return 0
        return max(a.bit_count() for a in self.adj)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((a.bit_count() for a in self.adj), reverse=True))

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        mask = self.adj[v]
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= self.adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = 0
        for v in vertices:
            self._check_vertex(v)
            mask |= 1 << v
        m = mask
        while m:
            low = m & -m
            if self.adj[low.bit_length() - 1] & mask:
                return False
            m ^= low
        return True

    def _check_vertex(self, v: int):
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")


def empty_graph(n: int) -> Graph:
    return Graph(n, [])


def single_vertex() -> Graph:
    return Graph(1, [])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs >= 1 vertex, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    edges = list(g.edges) + [(u + off, v + off) for u, v in h.edges]
    return Graph(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every cross edge."""
    off = g.n
    edges = list(g.edges) + [(u + off, v + off) for u, v in h.edges]
    edges += [(u, v + off) for u in range(g.n) for v in range(h.n)]
    return Graph(g.n + h.n, edges)


def corona_k1(g: Graph) -> Graph:
    """Attach one new pendant vertex to each vertex of g."""
    edges = list(g.edges) + [(v, g.n + v) for v in range(g.n)]
    return Graph(2 * g.n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (a, b) gets id a + b * g.n, so copies of
    g indexed by h's vertices occupy contiguous id blocks."""
    n = g.n * h.n
    edges = []
    for b in range(h.n):
        off = b * g.n
        edges += [(u + off, v + off) for u, v in g.edges]
    for u, v in h.edges:
        edges += [(a + u * g.n, a + v * g.n) for a in range(g.n)]
    return Graph(n, edges)


def to_edgelist(g: Graph) -> str:
    """Whitespace-separated interchange format: `n m` header, then one
    `u v` line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge list must start with an `n m` header line")
    n, m = int(rows[0][0]), int(rows[0][1])
    edges = [(int(u), int(v)) for u, v in rows[1:]]
    if len(edges) != m:
        raise ValueError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def to_dot(g: Graph) -> str:
    name = f"{g.family[0]}_{g.family[1]}" if g.family else "G"
    lines = [f"graph {name} {{"]
    isolated = [v for v in range(g.n) if g.adj[v] == 0]
    lines += [f"  {v};" for v in isolated]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
