"""Shared independent oracles for the test suite."""


def bfs_two_colorable(g):
    """Bipartiteness check by BFS 2-colouring; independent of the solvers."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in g.neighbors(v):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def exhaustive_labeling_extremum(class_sizes, direction):
    """Extremal sum(i * theta_i) over all label permutations, by brute force."""
    from itertools import permutations

    best = None
    for perm in permutations(class_sizes):
        value = sum(i * s for i, s in enumerate(perm, start=1))
        if best is None or (value < best if direction == "min" else value > best):
            best = value
    return best
