"""Regular and nearly regular gadgets placed inside the classes of a Turan graph.

A nearly d-regular graph has every degree equal to d except one vertex of
degree d-1; it is what parity forces when m*d is odd. The deficient vertex
is always the last one, ``m - 1``.
"""
from __future__ import annotations

from itertools import combinations

from .errors import InfeasibleError, ResourceLimitError
from .graph import Graph, is_triangle_free

BACKTRACK_NODE_LIMIT = 2_000_000


def target_degrees(m: int, d: int) -> list[int]:
    degs = [d] * m
    if m * d % 2:
        degs[-1] = d - 1
    return degs


def _bipartite_circulant(m: int, d: int) -> Graph:
    half = m // 2
    return Graph(m, tuple((i, half + (i + j) % half) for i in range(half) for j in range(d)))


def _sum_free_circulant(m: int, d: int) -> Graph | None:
    """d-regular triangle-free circulant on Z_m (d even, m odd), if one exists."""
    reps = range(1, (m - 1) // 2 + 1)
    # try the middle third first, it is sum-free whenever large enough
    middle = [a for a in reps if m < 3 * a < 2 * m or m < 3 * (m - a) < 2 * m]
    choices = [tuple(middle[:d // 2])] if len(middle) >= d // 2 else []
    choices += [c for c in combinations(reps, d // 2) if c not in choices]
    for chosen in choices:
        conn = {a % m for a in chosen} | {-a % m for a in chosen}
        if any((a + b) % m in conn for a in conn for b in conn):
            continue
        edges = {(min(i, (i + a) % m), max(i, (i + a) % m)) for i in range(m) for a in conn}
        return Graph(m, tuple(edges))
    return None


def _backtrack(m: int, degs: list[int], triangle_free: bool) -> Graph | None:
    adj = [0] * m
    deg = [0] * m
    nodes = [0]

    def rec(v: int) -> bool:
        nodes[0] += 1
        if nodes[0] > BACKTRACK_NODE_LIMIT:
            raise ResourceLimitError(f"gadget search exceeded {BACKTRACK_NODE_LIMIT} nodes")
        if v == m:
            return True
        need = degs[v] - deg[v]
        if need < 0:
            return False
        pool = [
            w for w in range(v + 1, m)
            if deg[w] < degs[w] and not (triangle_free and adj[v] & adj[w])
        ]
        if len(pool) < need:
            return False
        for chosen in combinations(pool, need):
            if triangle_free and any(adj[a] >> b & 1 for a, b in combinations(chosen, 2)):
                continue
            for w in chosen:
                adj[v] |= 1 << w
                adj[w] |= 1 << v
                deg[w] += 1
            deg[v] += need
            if rec(v + 1):
                return True
            deg[v] -= need
            for w in chosen:
                adj[v] &= ~(1 << w)
                adj[w] &= ~(1 << v)
                deg[w] -= 1
        return False

    if rec(0):
        return Graph.from_adjacency(adj)
    return None


def regular_graph(m: int, d: int, triangle_free: bool = True) -> Graph:
    """A d-regular graph on m vertices (nearly d-regular when m*d is odd).

    With ``triangle_free`` the output has no triangle. Raises
    InfeasibleError when no such graph exists.
    """
    if m < 1:
        raise InfeasibleError(f"gadget needs at least one vertex, got m={m}")
    if d < 0:
        raise ValueError(f"degree must be nonnegative, got {d}")
    if d == 0:
        return Graph(m)
    if d > m - 1:
        raise InfeasibleError(f"no {d}-regular graph on {m} vertices")
    if triangle_free:
        # a triangle-free graph on m vertices has at most floor(m^2/4) edges
        if sum(target_degrees(m, d)) // 2 > m * m // 4:
            raise InfeasibleError(f"no (nearly) {d}-regular triangle-free graph on {m} vertices")
        if m % 2 == 0 and 2 * d <= m:
            return _bipartite_circulant(m, d)
        if m % 2 == 1 and d % 2 == 0:
            g = _sum_free_circulant(m, d)
            if g is not None:
                return g
    else:
        if d % 2 == 0 or m % 2 == 0:
            conn = set(range(1, d // 2 + 1)) | ({m // 2} if d % 2 else set())
            edges = {(min(i, (i + a) % m), max(i, (i + a) % m)) for i in range(m) for a in conn}
            return Graph(m, tuple(edges))
    g = _backtrack(m, target_degrees(m, d), triangle_free)
    if g is None:
        kind = "triangle-free " if triangle_free else ""
        raise InfeasibleError(f"no (nearly) {d}-regular {kind}graph on {m} vertices")
    return g


def regular_triangle_free(m: int, d: int) -> Graph:
    """d-regular (or nearly d-regular) triangle-free graph on m vertices."""
    return regular_graph(m, d, triangle_free=True)


def is_nearly_regular(g: Graph, d: int) -> bool:
    """True if the degree multiset is exactly {d^m} or {d^(m-1), d-1} per the parity of m*d."""
    return sorted(g.degrees) == sorted(target_degrees(g.n, d))


def check_gadget(g: Graph, d: int, triangle_free: bool = True) -> bool:
    return is_nearly_regular(g, d) and (not triangle_free or is_triangle_free(g))
