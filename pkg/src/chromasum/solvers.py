"""Exact solvers for the six colouring quantities.

chi / chi_sum_* search proper colourings with exactly chi(G) colours;
b_chromatic / b_sum_* search b-colourings with exactly phi(G) colours.
Sum searches run over unlabeled partitions in restricted-growth order
(the lowest-numbered vertex of each new class exceeds the lowest-numbered
vertex of the previous class) and assign colour indices post hoc, which
shrinks the space by k! and keeps witnesses reproducible: among equal-value
partitions the lexicographically first restricted-growth string wins.

Budgets bound nodes and wall time; exhausting either raises, it never
degrades to a wrong answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .coloring import Coloring, optimal_labeling
from .graphs import Graph

SOLVER_VERSION = "1"

QUANTITIES = (
    "chi",
    "chi_sum_min",
    "chi_sum_max",
    "b_chromatic",
    "b_sum_min",
    "b_sum_max",
)

SUM_QUANTITIES = ("chi_sum_min", "chi_sum_max", "b_sum_min", "b_sum_max")


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 100_000_000
    max_time: float = 300.0


class BudgetExhausted(Exception):
    def __init__(self, message: str, nodes_explored: int = 0):
        super().__init__(message)
        self.nodes_explored = nodes_explored


@dataclass(frozen=True)
class SumResult:
    quantity: str
    value: int
    witness: Coloring
    nodes_explored: int
    elapsed_ms: int

    def to_json(self) -> dict:
        return {
            "quantity": self.quantity,
            "value": self.value,
            "witness": self.witness.to_json(),
            "nodes": self.nodes_explored,
            "millis": self.elapsed_ms,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SumResult":
        return cls(
            quantity=data["quantity"],
            value=int(data["value"]),
            witness=Coloring.from_json(data["witness"]),
            nodes_explored=int(data["nodes"]),
            elapsed_ms=int(data["millis"]),
        )


class _Tracker:
    """Shared node/time accounting for one solve call, nested phases included."""

    __slots__ = ("max_nodes", "deadline", "nodes", "t0")

    def __init__(self, budget: SearchBudget):
        self.max_nodes = budget.max_nodes
        self.t0 = time.monotonic()
        self.deadline = self.t0 + budget.max_time
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExhausted("node budget exhausted", self.nodes)
        if not (self.nodes & 0x3FF) and time.monotonic() > self.deadline:
            raise BudgetExhausted("time budget exhausted", self.nodes)

    def elapsed_ms(self) -> int:
        return int((time.monotonic() - self.t0) * 1000)


def m_bound(g: Graph) -> int:
    """m(G): largest i such that G has >= i vertices of degree >= i-1.
    Upper-bounds the b-chromatic number."""
    degs = sorted((a.bit_count() for a in g.adj), reverse=True)
    m = 0
    for i, d in enumerate(degs, start=1):
        if d >= i - 1:
            m = i
        else:
            break
    return m


def chromatic_number(g: Graph, budget: SearchBudget | None = None) -> SumResult:
    """Exact chi(G) by iterative deepening on k with saturation-degree
    ordered backtracking; colour j is only opened once colours < j are in use."""
    if g.n == 0:
        raise ValueError("chromatic number of the empty graph is undefined here")
    tracker = _Tracker(budget or SearchBudget())
    k, colors = _chi_search(g, tracker)
    witness = Coloring(k, [c + 1 for c in colors])
    return SumResult("chi", k, witness, tracker.nodes, tracker.elapsed_ms())


def chi_sum(
    g: Graph,
    direction: str,
    budget: SearchBudget | None = None,
    chi: int | None = None,
) -> SumResult:
    """Exact extremum of the colouring sum over proper colourings with
    exactly chi(G) colours."""
    _check_direction(direction)
    tracker = _Tracker(budget or SearchBudget())
    if chi is None:
        chi, _ = _chi_search(g, tracker)
    value, classes = _best_partition(g, chi, direction, tracker, require_b=False)
    witness = optimal_labeling(classes, direction, n=g.n)
    return SumResult(f"chi_sum_{direction}", value, witness, tracker.nodes, tracker.elapsed_ms())


def b_chromatic_number(g: Graph, budget: SearchBudget | None = None) -> SumResult:
    """Exact phi(G): largest k <= m(G) admitting a b-colouring with k colours."""
    tracker = _Tracker(budget or SearchBudget())
    k, classes = _phi_search(g, tracker)
    witness = optimal_labeling(classes, "min", n=g.n)
    return SumResult("b_chromatic", k, witness, tracker.nodes, tracker.elapsed_ms())


def b_sum(
    g: Graph,
    direction: str,
    budget: SearchBudget | None = None,
    phi: int | None = None,
) -> SumResult:
    """Exact extremum of the colouring sum over b-colourings with exactly
    phi(G) colours."""
    _check_direction(direction)
    tracker = _Tracker(budget or SearchBudget())
    if phi is None:
        phi, _ = _phi_search(g, tracker)
    found = _best_partition(g, phi, direction, tracker, require_b=True)
    if found is None:
        raise RuntimeError("no b-colouring with phi colours; this is a solver bug")
    value, classes = found
    witness = optimal_labeling(classes, direction, n=g.n)
    return SumResult(f"b_sum_{direction}", value, witness, tracker.nodes, tracker.elapsed_ms())


def solve(g: Graph, quantity: str, budget: SearchBudget | None = None) -> SumResult:
    if quantity == "chi":
        return chromatic_number(g, budget)
    if quantity == "b_chromatic":
        return b_chromatic_number(g, budget)
    if quantity in ("chi_sum_min", "chi_sum_max"):
        return chi_sum(g, quantity.rsplit("_", 1)[1], budget)
    if quantity in ("b_sum_min", "b_sum_max"):
        return b_sum(g, quantity.rsplit("_", 1)[1], budget)
    raise ValueError(f"unknown quantity {quantity!r}")


def _check_direction(direction: str):
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")


def _chi_search(g: Graph, tracker: _Tracker) -> tuple[int, list[int]]:
    for k in range(1, g.n + 1):
        colors = _find_k_coloring(g, k, tracker)
        if colors is not None:
            return k, colors
    raise RuntimeError("unreachable: every graph is n-colourable")


def _find_k_coloring(g: Graph, k: int, tracker: _Tracker) -> list[int] | None:
    """Proper colouring with at most k colours (0-based), or None.  DSATUR
    vertex order: most saturated, then highest degree, then lowest id."""
    n, adj = g.n, g.adj
    color = [-1] * n
    sat = [0] * n  # bitmask of colours present in the neighbourhood
    degs = [a.bit_count() for a in adj]

    def pick() -> int:
        best = -1
        best_key = (-1, -1, 0)
        for v in range(n):
            if color[v] < 0:
                key = (sat[v].bit_count(), degs[v], -v)
                if key > best_key:
                    best, best_key = v, key
        return best

    def extend(depth: int, used: int) -> bool:
        if depth == n:
            return True
        v = pick()
        av = adj[v]
        for c in range(used + 1 if used < k else k):
            if sat[v] >> c & 1:
                continue
            tracker.tick()
            color[v] = c
            bit = 1 << c
            touched = []
            m = av
            while m:
                low = m & -m
                u = low.bit_length() - 1
                m ^= low
                if not sat[u] & bit:
                    sat[u] |= bit
                    touched.append(u)
            if extend(depth + 1, max(used, c + 1)):
                return True
            for u in touched:
                sat[u] ^= bit
            color[v] = -1
        return False

    return color if extend(0, 0) else None


def _phi_search(g: Graph, tracker: _Tracker) -> tuple[int, list[list[int]]]:
    for k in range(m_bound(g), 0, -1):
        found = _first_b_partition(g, k, tracker)
        if found is not None:
            return k, found
    raise RuntimeError("unreachable: a b-colouring with chi(G) colours always exists")


def _best_partition(
    g: Graph,
    k: int,
    direction: str,
    tracker: _Tracker,
    require_b: bool,
) -> tuple[int, list[list[int]]] | None:
    """Extremal-sum partition of V into exactly k independent classes
    (b-feasible classes when require_b).

    Pruning: a partial partition is completed optimistically by giving each
    still-unopened class a single vertex and pouring every other unassigned
    vertex into the currently largest class; that completion extremises
    every prefix sum of the sorted size vector, so its labeled sum bounds
    the subtree for both directions.
    """
    n, adj = g.n, g.adj
    masks = [0] * k
    sizes = [0] * k
    assign = [0] * n
    minimize = direction == "min"
    full = (1 << n) - 1
    eligible = [v for v in range(n) if adj[v].bit_count() >= k - 1] if require_b else []
    eligible_mask = 0
    for v in eligible:
        eligible_mask |= 1 << v

    best_value: int | None = None
    best_assign: list[int] | None = None

    def b_feasible(v: int, used: int) -> bool:
        un = full ^ ((1 << v) - 1)
        for c in range(used):
            mc = masks[c]
            for w in eligible:
                aw = adj[w]
                wbit = 1 << w
                if wbit & mc:
                    pass
                elif wbit & un:
                    if aw & mc:
                        continue  # w already conflicts with class c
                else:
                    continue  # settled in another class
                hits = 0
                for c2 in range(used):
                    if c2 != c and aw & masks[c2]:
                        hits += 1
                if hits + (aw & un).bit_count() >= k - 1:
                    break
            else:
                return False
        return True

    def leaf_is_b() -> bool:
        for c in range(k):
            mc = masks[c]
            m = mc & eligible_mask
            while m:
                low = m & -m
                aw = adj[low.bit_length() - 1]
                m ^= low
                if all(aw & masks[c2] for c2 in range(k) if c2 != c):
                    break
            else:
                return False
        return True

    def search(v: int, used: int):
        nonlocal best_value, best_assign
        tracker.tick()
        if v == n:
            if used != k:
                return
            if require_b and not leaf_is_b():
                return
            ordered = sorted(sizes, reverse=True)
            if minimize:
                value = sum(i * s for i, s in enumerate(ordered, start=1))
                if best_value is None or value < best_value:
                    best_value, best_assign = value, assign.copy()
            else:
                value = sum(i * s for i, s in enumerate(reversed(ordered), start=1))
                if best_value is None or value > best_value:
                    best_value, best_assign = value, assign.copy()
            return
        need = k - used
        rem = n - v
        if need > rem:
            return
        if best_value is not None and used:
            padded = sorted(sizes[:used], reverse=True)
            padded[0] += rem - need
            padded += [1] * need
            if minimize:
                if sum(i * s for i, s in enumerate(padded, start=1)) >= best_value:
                    return
            else:
                if sum(i * s for i, s in enumerate(reversed(padded), start=1)) <= best_value:
                    return
        if require_b and used and not b_feasible(v, used):
            return
        av = adj[v]
        vbit = 1 << v
        for c in range(used + 1 if used < k else k):
            if av & masks[c]:
                continue
            masks[c] |= vbit
            sizes[c] += 1
            assign[v] = c
            search(v + 1, used + 1 if c == used else used)
            masks[c] ^= vbit
            sizes[c] -= 1

    search(0, 0)
    if best_value is None:
        if require_b:
            return None
        raise RuntimeError(f"no partition into {k} independent classes; this is a solver bug")
    classes: list[list[int]] = [[] for _ in range(k)]
    for v, c in enumerate(best_assign):
        classes[c].append(v)
    return best_value, classes


def _first_b_partition(g: Graph, k: int, tracker: _Tracker) -> list[list[int]] | None:
    """Lexicographically first partition into exactly k independent classes
    that forms a b-colouring, or None."""
    n, adj = g.n, g.adj
    masks = [0] * k
    assign = [0] * n
    full = (1 << n) - 1
    eligible = [v for v in range(n) if adj[v].bit_count() >= k - 1]
    eligible_mask = 0
    for v in eligible:
        eligible_mask |= 1 << v
    if len(eligible) < k:
        return None

    def b_feasible(v: int, used: int) -> bool:
        un = full ^ ((1 << v) - 1)
        for c in range(used):
            mc = masks[c]
            for w in eligible:
                aw = adj[w]
                wbit = 1 << w
                if wbit & mc:
                    pass
                elif wbit & un:
                    if aw & mc:
                        continue
                else:
                    continue
                hits = 0
                for c2 in range(used):
                    if c2 != c and aw & masks[c2]:
                        hits += 1
                if hits + (aw & un).bit_count() >= k - 1:
                    break
            else:
                return False
        return True

    def leaf_is_b() -> bool:
        for c in range(k):
            m = masks[c] & eligible_mask
            while m:
                low = m & -m
                aw = adj[low.bit_length() - 1]
                m ^= low
                if all(aw & masks[c2] for c2 in range(k) if c2 != c):
                    break
            else:
                return False
        return True

    def search(v: int, used: int) -> bool:
        tracker.tick()
        if v == n:
            return used == k and leaf_is_b()
        if k - used > n - v:
            return False
        if used and not b_feasible(v, used):
            return False
        av = adj[v]
        vbit = 1 << v
        for c in range(used + 1 if used < k else k):
            if av & masks[c]:
                continue
            masks[c] |= vbit
            assign[v] = c
            if search(v + 1, used + 1 if c == used else used):
                return True
            masks[c] ^= vbit
        return False

    if not search(0, 0):
        return None
    classes: list[list[int]] = [[] for _ in range(k)]
    for v, c in enumerate(assign):
        classes[c].append(v)
    return classes
