"""Colourings, colour-class partitions, and the weighted colouring sum.

A colouring assigns every vertex a colour index 1..k and the sum weights
each colour class by its index: sum(i * theta_i) where theta_i is the
size of class i.  Colour indices are deliberately 1-based; an off-by-one
here would silently corrupt every solver result.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graphs import Graph


class Coloring:
    """Total map vertex -> colour in 1..k with every colour used."""

    __slots__ = ("k", "colors")

    def __init__(self, k: int, colors: Sequence[int]):
        colors = tuple(colors)
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        used = set()
        for v, c in enumerate(colors):
            if not (1 <= c <= k):
                raise ValueError(f"vertex {v} has colour {c} outside 1..{k}")
            used.add(c)
        if len(used) != k:
            missing = sorted(set(range(1, k + 1)) - used)
            raise ValueError(f"colours {missing} are unused; empty classes are forbidden")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "colors", colors)

    def __setattr__(self, name, value):
        raise AttributeError("Coloring is immutable")

    def __eq__(self, other):
        return isinstance(other, Coloring) and (self.k, self.colors) == (other.k, other.colors)

    def __hash__(self):
        return hash((self.k, self.colors))

    def __repr__(self):
        return f"Coloring(k={self.k}, colors={list(self.colors)})"

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return out

    def to_json(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, data: dict) -> "Coloring":
        return cls(int(data["k"]), [int(c) for c in data["colors"]])


class Partition:
    """Ordered list of disjoint nonempty vertex classes covering 0..n-1."""

    __slots__ = ("classes", "n")

    def __init__(self, classes: Iterable[Iterable[int]], n: int):
        cls = tuple(frozenset(c) for c in classes)
        seen: set[int] = set()
        for c in cls:
            if not c:
                raise ValueError("empty colour class")
            if c & seen:
                raise ValueError("colour classes overlap")
            seen |= c
        if seen != set(range(n)):
            raise ValueError(f"classes do not cover 0..{n - 1}")
        object.__setattr__(self, "classes", cls)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __len__(self):
        return len(self.classes)


def theta(coloring: Coloring) -> tuple[int, ...]:
    counts = [0] * coloring.k
    for c in coloring.colors:
        counts[c - 1] += 1
    return tuple(counts)


def coloring_sum(coloring: Coloring) -> int:
    return sum(i * t for i, t in enumerate(theta(coloring), start=1))


def optimal_sum(sizes: Iterable[int], direction: str) -> int:
    """Best achievable sum(i * theta_i) over relabelings of classes with the
    given sizes: nonincreasing sizes for min, nondecreasing for max."""
    ordered = sorted(sizes, reverse=(direction == "min"))
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
    return sum(i * s for i, s in enumerate(ordered, start=1))


def optimal_labeling(partition: Partition | Iterable[Iterable[int]], direction: str, n: int | None = None) -> Coloring:
    """Assign colour indices 1..k to the classes of an unlabeled partition so
    the colouring sum is extremal: for min, class sizes are nonincreasing in
    colour index; for max, nondecreasing.  Ties break on the smallest vertex
    id contained in the class, so the labeling is deterministic."""
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
    if isinstance(partition, Partition):
        classes = partition.classes
        n = partition.n
    else:
        classes = tuple(frozenset(c) for c in partition)
        if n is None:
            n = sum(len(c) for c in classes)
        Partition(classes, n)  # validate
    sign = -1 if direction == "min" else 1
    ordered = sorted(classes, key=lambda c: (sign * len(c), min(c)))
    colors = [0] * n
    for idx, c in enumerate(ordered, start=1):
        for v in c:
            colors[v] = idx
    return Coloring(len(ordered), colors)


def is_proper(g: Graph, coloring: Coloring) -> bool:
    if len(coloring.colors) != g.n:
        raise ValueError(f"colouring covers {len(coloring.colors)} vertices, graph has {g.n}")
    cols = coloring.colors
    return all(cols[u] != cols[v] for u, v in g.edges)


def is_b_vertex(g: Graph, coloring: Coloring, v: int) -> bool:
    """True iff v's neighbourhood contains every colour except v's own."""
    cols = coloring.colors
    seen = {cols[u] for u in g.neighbors(v)}
    seen.discard(cols[v])
    return len(seen) == coloring.k - 1


def is_b_colouring(g: Graph, coloring: Coloring) -> bool:
    """True iff the colouring is proper and every colour class contains at
    least one b-vertex (a vertex adjacent to all other colours)."""
    if not is_proper(g, coloring):
        return False
    needs = set(range(1, coloring.k + 1))
    for v in range(g.n):
        c = coloring.colors[v]
        if c in needs and is_b_vertex(g, coloring, v):
            needs.discard(c)
            if not needs:
                return True
    return not needs
