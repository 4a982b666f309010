"""Canonical labelling by individualization-refinement.

The search tree is explored in full (no automorphism group bookkeeping);
branches on vertices that are twins inside the target cell are skipped,
since swapping two twins is an automorphism that fixes the partition.
That keeps highly symmetric graphs such as complete multipartite ones
cheap. The certificate is the graph6 string of the lexicographically
largest relabelled adjacency matrix.
"""
from __future__ import annotations

from .errors import ResourceLimitError
from .graph import Graph, relabel
from .graph6 import encode

MAX_CANON_VERTICES = 40

CanonicalForm = bytes


def _refine(cells: list[list[int]], adj: tuple[int, ...]) -> list[list[int]]:
    cells = [c[:] for c in cells]
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(cells):
            mask = 0
            for v in cells[i]:
                mask |= 1 << v
            out = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & mask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    changed = True
                    out.extend(groups[k] for k in sorted(groups))
            cells = out
            i += 1
    return cells


def _certificate(order: list[int], adj: tuple[int, ...]) -> int:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    n = len(order)
    # bit for pair (i, j), i < j, is set at position of j-major upper triangle
    cert = 0
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            cert = cert << 1 | (row >> order[i] & 1)
    return cert


def canonical_labeling(g: Graph) -> list[int]:
    """Permutation ``perm`` with ``relabel(g, perm)`` canonical (perm[v] = new label)."""
    if g.n > MAX_CANON_VERTICES:
        raise ResourceLimitError(f"canonical labelling limited to {MAX_CANON_VERTICES} vertices, got {g.n}")
    if g.n == 0:
        return []
    adj = g.adj
    best: list = [None, None]

    def search(cells):
        cells = _refine(cells, adj)
        target = None
        for idx, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = idx
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(order, adj)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, order
            return
        cell = cells[target]
        tried = []
        for v in cell:
            if any((adj[v] & ~(1 << w)) == (adj[w] & ~(1 << v)) for w in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(g.n))])
    order = best[1]
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return perm


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g))


def canonical_form(g: Graph) -> CanonicalForm:
    return encode(canonical_graph(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.e != h.e or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g) == canonical_form(h)
