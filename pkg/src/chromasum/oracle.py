"""Brute-force auditor for the optimized solvers.

Enumerates every surjective k-colouring up to colour-class relabeling as a
restricted-growth string, pruning only on propriety of the partial string,
then filters (b-colourings where required) and labels each surviving
partition optimally.  Slow on purpose: the point is that it shares no
pruning logic with the optimized search it audits.  Intended for graphs of
at most ~18 vertices; b-quantities get expensive well before that.
"""

from __future__ import annotations

from .coloring import optimal_labeling
from .graphs import Graph
from .solvers import QUANTITIES, SearchBudget, SumResult, _Tracker


def brute_force_oracle(
    g: Graph,
    quantity: str,
    k: int | None = None,
    budget: SearchBudget | None = None,
) -> SumResult:
    """Independent exhaustive computation of any solver quantity.

    For the sum quantities, `k` fixes the number of colour classes; when
    omitted it is determined by the oracle's own scan (smallest feasible k
    for chi sums, largest b-feasible k for b sums), never borrowed from the
    optimized solver.
    """
    if quantity not in QUANTITIES:
        raise ValueError(f"unknown quantity {quantity!r}")
    tracker = _Tracker(budget or SearchBudget())

    if quantity == "chi":
        value, classes = _scan_chi(g, tracker)
        witness = optimal_labeling(classes, "min", n=g.n)
        return SumResult("chi", value, witness, tracker.nodes, tracker.elapsed_ms())

    if quantity == "b_chromatic":
        value, classes = _scan_phi(g, tracker)
        witness = optimal_labeling(classes, "min", n=g.n)
        return SumResult("b_chromatic", value, witness, tracker.nodes, tracker.elapsed_ms())

    need_b = quantity.startswith("b_sum")
    direction = quantity.rsplit("_", 1)[1]
    if k is None:
        k = _scan_phi(g, tracker)[0] if need_b else _scan_chi(g, tracker)[0]
    value, classes = _extremal(g, k, direction, need_b, tracker)
    witness = optimal_labeling(classes, direction, n=g.n)
    return SumResult(quantity, value, witness, tracker.nodes, tracker.elapsed_ms())


def _scan_chi(g: Graph, tracker: _Tracker) -> tuple[int, list[list[int]]]:
    for j in range(1, g.n + 1):
        found = _first_partition(g, j, False, tracker)
        if found is not None:
            return j, found
    raise RuntimeError("unreachable")


def _scan_phi(g: Graph, tracker: _Tracker) -> tuple[int, list[list[int]]]:
    # phi(G) <= max degree + 1, and a b-colouring with chi(G) colours always
    # exists, so the downward scan terminates with the exact maximum.
    for j in range(g.max_degree() + 1, 0, -1):
        found = _first_partition(g, j, True, tracker)
        if found is not None:
            return j, found
    raise RuntimeError("unreachable")


def _first_partition(g: Graph, k: int, need_b: bool, tracker: _Tracker):
    hit: list[list[list[int]]] = []

    def on_leaf(classes):
        hit.append(classes)
        return True

    _enumerate(g, k, need_b, tracker, on_leaf)
    return hit[0] if hit else None


def _extremal(g: Graph, k: int, direction: str, need_b: bool, tracker: _Tracker):
    best: list = [None, None]  # value, classes
    better = (lambda a, b: a < b) if direction == "min" else (lambda a, b: a > b)

    def on_leaf(classes):
        sizes = sorted((len(c) for c in classes), reverse=(direction == "min"))
        value = sum(i * s for i, s in enumerate(sizes, start=1))
        if best[0] is None or better(value, best[0]):
            best[0], best[1] = value, classes
        return False

    _enumerate(g, k, need_b, tracker, on_leaf)
    if best[0] is None:
        raise RuntimeError(f"no {'b-' if need_b else ''}partition into {k} classes exists")
    return best[0], best[1]


def _enumerate(g: Graph, k: int, need_b: bool, tracker: _Tracker, on_leaf) -> None:
    """Visit every partition of V(g) into exactly k independent classes, in
    restricted-growth (lexicographic) order; classes must each hold a vertex
    adjacent to all other classes when need_b.  on_leaf returning True stops
    the enumeration."""
    n, adj = g.n, g.adj
    masks = [0] * k
    assign = [0] * n

    def is_b(used_masks) -> bool:
        for c, mc in enumerate(used_masks):
            m = mc
            while m:
                low = m & -m
                aw = adj[low.bit_length() - 1]
                m ^= low
                if all(aw & mo for co, mo in enumerate(used_masks) if co != c):
                    break
            else:
                return False
        return True

    def rec(v: int, used: int) -> bool:
        tracker.tick()
        if v == n:
            if used != k:
                return False
            if need_b and not is_b(masks):
                return False
            classes: list[list[int]] = [[] for _ in range(k)]
            for w, c in enumerate(assign):
                classes[c].append(w)
            return on_leaf(classes)
        if k - used > n - v:
            return False
        av = adj[v]
        vbit = 1 << v
        for c in range(used + 1 if used < k else k):
            if av & masks[c]:
                continue
            masks[c] |= vbit
            assign[v] = c
            if rec(v + 1, used + 1 if c == used else used):
                return True
            masks[c] ^= vbit
        return False

    rec(0, 0)
