"""Non-induced subgraph isomorphism by backtracking.

Pattern vertices are placed in a connectivity-greedy order, host
candidates are filtered by degree and kept as bitmask domains with
forward checking. For existence queries two symmetry rules cut the
tree: twin vertices of the pattern must receive increasing images, and
among interchangeable (twin) host vertices only the smallest unused one
is tried. Both rules keep the lexicographically first embedding, so the
answer is exact.
"""
from __future__ import annotations

from typing import Iterator

from .graph import Graph


def twin_lower_masks(adj: tuple[int, ...]) -> list[int]:
    """For each vertex, bitmask of smaller vertices that are its twins."""
    n = len(adj)
    out = [0] * n
    for v in range(n):
        for u in range(v):
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                out[v] |= 1 << u
    return out


def search_order(adj: tuple[int, ...], verts: list[int]) -> list[int]:
    """Most-constrained-first ordering: each next vertex has the most
    neighbours already placed, ties to higher degree, then lower label."""
    remaining = set(verts)
    order: list[int] = []
    placed = 0
    while remaining:
        v = max(remaining, key=lambda x: ((adj[x] & placed).bit_count(), adj[x].bit_count(), -x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


class _Matcher:
    def __init__(self, pattern: Graph, host: Graph, symmetry: bool):
        self.p_adj = pattern.adj
        self.h_adj = host.adj
        verts = [v for v in range(pattern.n) if pattern.adj[v]]
        self.order = search_order(self.p_adj, verts)
        self.symmetry = symmetry
        hdeg = host.degrees
        self.init_dom = {}
        for v in self.order:
            d = pattern.degrees[v]
            self.init_dom[v] = sum(1 << h for h in range(host.n) if hdeg[h] >= d)
        self.prev_twin: dict[int, int] = {}
        self.host_twins = twin_lower_masks(self.h_adj) if symmetry else None
        if symmetry:
            p_adj = self.p_adj
            for i, v in enumerate(self.order):
                for u in reversed(self.order[:i]):
                    if p_adj[u] & ~(1 << v) == p_adj[v] & ~(1 << u):
                        self.prev_twin[v] = u
                        break
        # later pattern neighbours of each position, for forward checking
        pos = {v: i for i, v in enumerate(self.order)}
        self.later_nbrs = [
            [u for u in self.order[i + 1:] if self.p_adj[v] >> u & 1] for i, v in enumerate(self.order)
        ]
        self.pos = pos

    def run(self) -> Iterator[dict[int, int]]:
        order = self.order
        if not order:
            yield {}
            return
        dom = dict(self.init_dom)
        if any(not d for d in dom.values()):
            return
        img: dict[int, int] = {}
        yield from self._rec(0, 0, dom, img)

    def _rec(self, depth, used, dom, img):
        order = self.order
        if depth == len(order):
            yield dict(img)
            return
        v = order[depth]
        cand = dom[v] & ~used
        if self.symmetry and v in self.prev_twin:
            floor = img[self.prev_twin[v]]
            cand &= ~((1 << (floor + 1)) - 1)
        h_adj = self.h_adj
        nbrs = self.later_nbrs[depth]
        while cand:
            low = cand & -cand
            h = low.bit_length() - 1
            cand ^= low
            if self.symmetry and self.host_twins[h] & ~used:
                continue
            new_used = used | low
            new_dom = dom
            ok = True
            if nbrs:
                new_dom = dict(dom)
                row = h_adj[h]
                for u in nbrs:
                    d = new_dom[u] & row
                    if not d & ~new_used:
                        ok = False
                        break
                    new_dom[u] = d
            if not ok:
                continue
            img[v] = h
            yield from self._rec(depth + 1, new_used, new_dom, img)
            del img[v]


def find_subgraph(pattern: Graph, host: Graph) -> dict[int, int] | None:
    """An embedding of ``pattern`` into ``host`` as a vertex map, or None.

    Isolated pattern vertices only need spare host capacity; they are mapped
    to the smallest unused host vertices in the returned witness.
    """
    if pattern.n > host.n or pattern.e > host.e:
        return None
    pd = sorted(pattern.degrees, reverse=True)
    hd = sorted(host.degrees, reverse=True)
    if any(a > b for a, b in zip(pd, hd)):
        return None
    for emb in _Matcher(pattern, host, symmetry=True).run():
        free = [h for h in range(host.n) if h not in set(emb.values())]
        for v in pattern.isolated_vertices():
            emb[v] = free.pop(0)
        return emb
    return None


def contains_subgraph(pattern: Graph, host: Graph) -> bool:
    return find_subgraph(pattern, host) is not None


def iter_embeddings(pattern: Graph, host: Graph) -> Iterator[dict[int, int]]:
    """Every injective map of the non-isolated pattern vertices that sends
    edges to edges (isolated pattern vertices are left unmapped)."""
    if pattern.n > host.n or pattern.e > host.e:
        return
    yield from _Matcher(pattern, host, symmetry=False).run()


def edge_images(pattern: Graph, host: Graph) -> set[frozenset[tuple[int, int]]]:
    """Distinct host edge sets that are images of ``pattern``."""
    out = set()
    for emb in iter_embeddings(pattern, host):
        out.add(frozenset((min(emb[u], emb[v]), max(emb[u], emb[v])) for u, v in pattern.edges))
    return out
