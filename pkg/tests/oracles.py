"""Brute-force reference implementations used only by the tests."""
from __future__ import annotations

from itertools import combinations, permutations

from antiramsey.graph import Graph


def labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def iso_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class, by orbit sweeping."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    maps = []
    for perm in permutations(range(n)):
        maps.append([index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs])
    seen = set()
    reps = []
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        for m in maps:
            img = 0
            for i, j in enumerate(m):
                if mask >> i & 1:
                    img |= 1 << j
            seen.add(img)
        reps.append(Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1)))
    return reps


def orbits(n: int) -> list[list[Graph]]:
    """All labeled graphs on n vertices grouped into isomorphism orbits."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    maps = [[index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs] for perm in permutations(range(n))]
    seen = set()
    out = []
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        orbit = set()
        for m in maps:
            img = 0
            for i, j in enumerate(m):
                if mask >> i & 1:
                    img |= 1 << j
            orbit.add(img)
        seen |= orbit
        out.append([Graph(n, tuple(p for i, p in enumerate(pairs) if x >> i & 1)) for x in sorted(orbit)])
    return out


def brute_contains(pattern: Graph, host: Graph) -> bool:
    if pattern.n > host.n:
        return False
    for img in permutations(range(host.n), pattern.n):
        if all(host.has_edge(img[u], img[v]) for u, v in pattern.edges):
            return True
    return False


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.e != h.e:
        return False
    target = h.edge_set
    for perm in permutations(range(g.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in g.edges):
            return True
    return False


def brute_chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for assign in _assignments(g.n, k):
            if all(assign[u] != assign[v] for u, v in g.edges):
                return k
    return g.n


def _assignments(n, k):
    if n == 0:
        yield ()
        return
    for rest in _assignments(n - 1, k):
        for c in range(k):
            yield rest + (c,)


def set_partitions(items: list):
    """Every set partition of ``items`` as a restricted growth string."""
    m = len(items)

    def rec(i, mx, cur):
        if i == m:
            yield tuple(cur)
            return
        for c in range(mx + 2):
            cur.append(c)
            yield from rec(i + 1, max(mx, c), cur)
            cur.pop()

    if m == 0:
        yield ()
        return
    yield from rec(0, -1, [])


def brute_rainbow(coloring, pattern: Graph) -> bool:
    for img in permutations(range(coloring.n), pattern.n):
        cols = [coloring.color(img[u], img[v]) for u, v in pattern.edges]
        if len(set(cols)) == len(cols):
            return True
    return False
