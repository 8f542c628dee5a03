"""Named constructors for the cycle-derived graph families under study.

Every generator uses a deterministic vertex id layout -- hub first, then
inner-cycle vertices in ring order, then outer-cycle vertices, then
pendants -- so solver witnesses are reproducible and comparable between
runs.  Each generated graph carries a family tag and per-vertex roles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    HUB,
    INNER_CYCLE,
    OUTER_CYCLE,
    PENDANT,
    Graph,
    VertexRole,
    cartesian_product,
    cycle,
    disjoint_union,
    join,
    path,
    single_vertex,
)

FAMILY_KINDS = ("wheel", "double_wheel", "helm", "closed_helm", "sunlet", "web")
MIN_N = 3


@dataclass(frozen=True)
class Family:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}")
        if self.n < MIN_N:
            raise ValueError(f"{self.kind} needs n >= {MIN_N}, got {self.n}")

    def __str__(self):
        return f"{self.kind}:{self.n}"


def parse_family(spec: str) -> Family:
    """Parse a CLI family spec like `helm:7`."""
    kind, sep, num = spec.partition(":")
    if not sep:
        raise ValueError(f"family spec must look like kind:n, got {spec!r}")
    try:
        n = int(num)
    except ValueError:
        raise ValueError(f"family parameter must be an integer, got {num!r}") from None
    return Family(kind, n)


def _ring(kind: str, n: int) -> list[VertexRole]:
    return [VertexRole(kind, i) for i in range(1, n + 1)]


def wheel(n: int) -> Graph:
    """Cycle C_n joined to a single hub vertex (n+1 vertices, 2n edges)."""
    _check(n)
    g = join(single_vertex(), cycle(n))
    roles = [VertexRole(HUB, 0)] + _ring(INNER_CYCLE, n)
    return Graph(g.n, g.edges, family=("wheel", n), roles=tuple(roles))


def double_wheel(n: int) -> Graph:
    """Two disjoint copies of C_n joined to one hub (2n+1 vertices, 4n edges)."""
    _check(n)
    g = join(single_vertex(), disjoint_union(cycle(n), cycle(n)))
    roles = [VertexRole(HUB, 0)] + _ring(INNER_CYCLE, n) + _ring(OUTER_CYCLE, n)
    return Graph(g.n, g.edges, family=("double_wheel", n), roles=tuple(roles))


def helm(n: int) -> Graph:
    """Wheel with one pendant attached to each cycle vertex (2n+1, 3n)."""
    _check(n)
    w = wheel(n)
    edges = list(w.edges) + [(i, n + i) for i in range(1, n + 1)]
    roles = [VertexRole(HUB, 0)] + _ring(INNER_CYCLE, n) + _ring(PENDANT, n)
    return Graph(2 * n + 1, edges, family=("helm", n), roles=tuple(roles))


def closed_helm(n: int) -> Graph:
    """Helm whose pendants are joined into an outer cycle (2n+1, 4n)."""
    _check(n)
    h = helm(n)
    ring = [(n + i, n + i % n + 1) for i in range(1, n + 1)]
    roles = [VertexRole(HUB, 0)] + _ring(INNER_CYCLE, n) + _ring(OUTER_CYCLE, n)
    return Graph(2 * n + 1, list(h.edges) + ring, family=("closed_helm", n), roles=tuple(roles))


def sunlet(n: int) -> Graph:
    """Corona C_n (.) K_1: one pendant per cycle vertex (2n, 2n)."""
    _check(n)
    from .graphs import corona_k1

    g = corona_k1(cycle(n))
    roles = _ring(INNER_CYCLE, n) + _ring(PENDANT, n)
    return Graph(g.n, g.edges, family=("sunlet", n), roles=tuple(roles))


def web(n: int) -> Graph:
    """Prism C_n x P_2 with a pendant on every outer-cycle vertex (3n, 4n)."""
    _check(n)
    prism = cartesian_product(cycle(n), path(2))
    edges = list(prism.edges) + [(n + i, 2 * n + i) for i in range(n)]
    roles = _ring(INNER_CYCLE, n) + _ring(OUTER_CYCLE, n) + _ring(PENDANT, n)
    return Graph(3 * n, edges, family=("web", n), roles=tuple(roles))


_BUILDERS = {
    "wheel": wheel,
    "double_wheel": double_wheel,
    "helm": helm,
    "closed_helm": closed_helm,
    "sunlet": sunlet,
    "web": web,
}


def build(family: Family) -> Graph:
    return _BUILDERS[family.kind](family.n)


def make(kind: str, n: int) -> Graph:
    return build(Family(kind, n))


def _check(n: int):
    if n < MIN_N:
        raise ValueError(f"family parameter must be >= {MIN_N}, got {n}")
