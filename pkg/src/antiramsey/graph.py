"""Immutable labeled simple graphs and the standard constructors.

Vertices are ``0..n-1``. Every constructor returns a fixed labeling so
results are reproducible; compare graphs up to isomorphism with
:func:`antiramsey.canon.canonical_form`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= self.n:
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((u, v))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> Graph:
        n = len(adj)
        return cls(n, tuple((u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1))

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks."""
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def __repr__(self):
        return f"Graph(n={self.n}, e={self.e})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# -- standard graphs -------------------------------------------------------

def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def path(k: int) -> Graph:
    """P_k: path on k vertices."""
    return Graph(k, tuple((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> Graph:
    """C_k for k >= 3; smaller counts give the edgeless graph on k vertices."""
    if k < 3:
        return Graph(k)
    return Graph(k, tuple((i, (i + 1) % k) for i in range(k)))


def star(k: int) -> Graph:
    """S_k: star on k vertices, centre 0."""
    return Graph(k, tuple((0, i) for i in range(1, k)))


def matching(k: int) -> Graph:
    """M_k: floor(k/2) disjoint edges, plus an isolated vertex when k is odd."""
    return Graph(k, tuple((2 * i, 2 * i + 1) for i in range(k // 2)))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    if not sizes:
        raise ValueError("need at least one part")
    if any(s < 0 for s in sizes):
        raise ValueError(f"part sizes must be nonnegative: {list(sizes)}")
    parts = _blocks(sizes)
    edges = [(u, v) for a, b in combinations(parts, 2) for u in a for v in b]
    return Graph(sum(sizes), tuple(edges))


def turan_part_sizes(n: int, p: int) -> list[int]:
    """Balanced part sizes of T(n, p), largest first."""
    if p < 1:
        raise ValueError(f"Turan graph needs p >= 1, got p={p}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    q, r = divmod(n, p)
    return [q + 1] * r + [q] * (p - r)


def turan(n: int, p: int) -> Graph:
    return complete_multipartite(turan_part_sizes(n, p))


def parts_of(sizes: Sequence[int]) -> list[list[int]]:
    """Vertex blocks of a multipartite graph built from ``sizes``."""
    return _blocks(sizes)


def _blocks(sizes: Sequence[int]) -> list[list[int]]:
    out, start = [], 0
    for s in sizes:
        out.append(list(range(start, start + s)))
        start += s
    return out


# -- operations ------------------------------------------------------------

def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.edges + tuple((u + shift, v + shift) for u, v in h.edges))


def join(g: Graph, h: Graph) -> Graph:
    u = disjoint_union(g, h)
    cross = tuple((a, g.n + b) for a in range(g.n) for b in range(h.n))
    return Graph(u.n, u.edges + cross)


def copies(k: int, g: Graph) -> Graph:
    if k < 0:
        raise ValueError(f"copy count must be nonnegative, got {k}")
    out = Graph(0)
    for _ in range(k):
        out = disjoint_union(out, g)
    return out


def complement(g: Graph) -> Graph:
    return Graph(g.n, tuple(e for e in combinations(range(g.n), 2) if e not in g.edge_set))


def delete_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    """Remove the listed edges; the vertex set is kept."""
    drop = set()
    for u, v in edges:
        e = (min(u, v), max(u, v))
        if e not in g.edge_set:
            raise ValueError(f"edge {e} not present in graph")
        drop.add(e)
    return Graph(g.n, tuple(e for e in g.edges if e not in drop))


def add_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    return Graph(g.n, g.edges + tuple(edges))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph, relabelled to ``0..len-1`` in ascending vertex order."""
    vs = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(vs)}
    return Graph(len(vs), tuple((pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos))


def strip_isolated(g: Graph) -> Graph:
    return induced_subgraph(g, [v for v in range(g.n) if g.adj[v]])


def remove_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    gone = set(vertices)
    return induced_subgraph(g, [v for v in range(g.n) if v not in gone])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Vertex ``v`` becomes ``perm[v]``."""
    return Graph(g.n, tuple((perm[u], perm[v]) for u, v in g.edges))


def pad(g: Graph, n: int) -> Graph:
    """Add isolated vertices up to ``n`` vertices."""
    if n < g.n:
        raise ValueError(f"cannot pad {g.n} vertices down to {n}")
    return Graph(n, g.edges)


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    return all(not (adj[u] & adj[v]) for u, v in g.edges)


def connected_components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(_bits(comp))
    return comps


# -- named graphs from the anti-Ramsey literature --------------------------

def general_fan(k: int, p: int) -> Graph:
    """k copies of K_{p+1} sharing vertex 0 (pk + 1 vertices)."""
    if k < 1 or p < 1:
        raise ValueError(f"fan needs k >= 1 and p >= 1, got k={k}, p={p}")
    edges = []
    for i in range(k):
        block = [0] + list(range(1 + i * p, 1 + (i + 1) * p))
        edges.extend(combinations(block, 2))
    return Graph(p * k + 1, tuple(edges))


def fan(k: int) -> Graph:
    """k triangles sharing one vertex."""
    return general_fan(k, 2)


def petersen() -> Graph:
    """Kneser graph KG(5, 2)."""
    pairs = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2) if not set(pairs[i]) & set(pairs[j])]
    return Graph(10, tuple(edges))


def q_graph(p: int, k: int) -> Graph:
    """Q(p, k) = K_1 v T(pk, p)."""
    if p < 1 or k < 1:
        raise ValueError(f"Q(p, k) needs p, k >= 1, got p={p}, k={k}")
    return join(complete(1), turan(p * k, p))


def h_graph(n: int, p: int, k: int) -> Graph:
    """H(n, p, k) = K_{k-1} v T(n-k+1, p)."""
    _check_hk(n, p, k)
    return join(complete(k - 1), turan(n - k + 1, p))


def h_prime_graph(n: int, p: int, k: int) -> Graph:
    """H'(n, p, k): independent set of size k-1 joined to T(n-k+1, p)."""
    _check_hk(n, p, k)
    return join(empty(k - 1), turan(n - k + 1, p))


def _check_hk(n: int, p: int, k: int):
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if not 1 <= k <= n + 1:
        raise ValueError(f"need 1 <= k <= n + 1, got n={n}, k={k}")
