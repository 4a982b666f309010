"""Exact vertex colouring: k-colourability backtracking and chromatic number."""
from __future__ import annotations

from .errors import ResourceLimitError
from .graph import Graph

MAX_CHROMATIC_VERTICES = 48


def _check(g: Graph):
    if g.n > MAX_CHROMATIC_VERTICES:
        raise ResourceLimitError(f"exact colouring limited to {MAX_CHROMATIC_VERTICES} vertices, got {g.n}")


def _greedy_clique(adj: tuple[int, ...], verts: int) -> int:
    best = 0
    v = verts
    while v:
        low = v & -v
        start = low.bit_length() - 1
        v ^= low
        size, cand = 1, verts & adj[start]
        while cand:
            # take the candidate with most neighbours inside the candidate set
            pick, pick_deg = -1, -1
            c = cand
            while c:
                lb = c & -c
                u = lb.bit_length() - 1
                c ^= lb
                d = (adj[u] & cand).bit_count()
                if d > pick_deg:
                    pick, pick_deg = u, d
            size += 1
            cand &= adj[pick]
        best = max(best, size)
    return best


def find_coloring(g: Graph, k: int, vertices: int | None = None) -> list[int] | None:
    """A proper colouring with at most ``k`` colours of the subgraph induced on
    ``vertices`` (bitmask, default all), as a list indexed by vertex
    (-1 outside ``vertices``), or None.
    """
    _check(g)
    adj = g.adj
    verts = (1 << g.n) - 1 if vertices is None else vertices
    order_count = verts.bit_count()
    color = [-1] * g.n
    if order_count == 0:
        return color
    if k <= 0:
        return None
    # colour classes as bitmasks; DSATUR-style choice of next vertex
    classes = [0] * k

    def pick(uncol: int) -> int:
        best, best_key = -1, None
        u = uncol
        while u:
            lb = u & -u
            v = lb.bit_length() - 1
            u ^= lb
            sat = sum(1 for c in classes if c & adj[v])
            key = (sat, (adj[v] & uncol).bit_count())
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def rec(uncol: int, used: int) -> bool:
        if not uncol:
            return True
        v = pick(uncol)
        rest = uncol & ~(1 << v)
        # colours beyond the first unused one are symmetric
        for c in range(min(used + 1, k)):
            if classes[c] & adj[v]:
                continue
            classes[c] |= 1 << v
            color[v] = c
            if rec(rest, max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
            color[v] = -1
        return False

    return color if rec(verts, 0) else None


def is_colorable(g: Graph, k: int, vertices: int | None = None) -> bool:
    return find_coloring(g, k, vertices) is not None


def chromatic_number(g: Graph, vertices: int | None = None) -> int:
    """Exact chromatic number (0 for the graph with no vertices)."""
    _check(g)
    verts = (1 << g.n) - 1 if vertices is None else vertices
    if not verts:
        return 0
    adj = g.adj
    if all(not (adj[v] & verts) for v in range(g.n) if verts >> v & 1):
        return 1
    lo = max(2, _greedy_clique(adj, verts))
    hi = _greedy_upper(adj, verts)
    for k in range(lo, hi):
        if is_colorable(g, k, verts):
            return k
    return hi


def _greedy_upper(adj: tuple[int, ...], verts: int) -> int:
    order = sorted((v for v in range(len(adj)) if verts >> v & 1), key=lambda v: -(adj[v] & verts).bit_count())
    classes: list[int] = []
    for v in order:
        for i, c in enumerate(classes):
            if not c & adj[v]:
                classes[i] |= 1 << v
                break
        else:
            classes.append(1 << v)
    return len(classes)
