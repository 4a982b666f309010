"""Edge colourings of complete graphs and rainbow subgraph detection."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import ResourceLimitError
from .graph import Graph
from .subgraph import search_order

MAX_REPRESENTING_GRAPHS = 10**6


def edge_index(n: int, u: int, v: int) -> int:
    """Position of pair (u, v) in the lexicographic list of pairs of K_n."""
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def all_pairs(n: int) -> Iterator[tuple[int, int]]:
    for u in range(n):
        for v in range(u + 1, n):
            yield u, v


def _normalized(colors: Sequence) -> tuple[int, ...]:
    names: dict = {}
    return tuple(names.setdefault(c, len(names)) for c in colors)


@dataclass(frozen=True)
class ColoringOfKn:
    """Colour of every pair of K_n, listed in lexicographic pair order.

    Colours are small integers; the normalized form numbers them 0, 1, ...
    by first appearance. ``meta`` carries notes from constructors and does
    not take part in equality.
    """
    n: int
    colors: tuple[int, ...]
    meta: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        if len(self.colors) != self.n * (self.n - 1) // 2:
            raise ValueError(f"need {self.n * (self.n - 1) // 2} edge colours for K_{self.n}, got {len(self.colors)}")
        if any(not isinstance(c, int) or c < 0 for c in self.colors):
            raise ValueError("colours must be nonnegative integers")

    @classmethod
    def from_labels(cls, n: int, labels: Iterable, meta: dict | None = None) -> ColoringOfKn:
        """Normalized colouring from arbitrary hashable labels in pair order."""
        return cls(n, _normalized(list(labels)), meta or {})

    @classmethod
    def from_function(cls, n: int, fn, meta: dict | None = None) -> ColoringOfKn:
        return cls.from_labels(n, (fn(u, v) for u, v in all_pairs(n)), meta)

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("no colour on a loop")
        return self.colors[edge_index(self.n, u, v)]

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        m = [[-1] * self.n for _ in range(self.n)]
        for (u, v), c in zip(all_pairs(self.n), self.colors):
            m[u][v] = m[v][u] = c
        return tuple(tuple(r) for r in m)

    def is_normalized(self) -> bool:
        return self.colors == _normalized(self.colors)

    @cached_property
    def color_twin_masks(self) -> tuple[int, ...]:
        """Bit u of entry w (u < w) is set when swapping u and w maps the
        colouring to itself up to renaming colours."""
        n, m = self.n, self.matrix
        out = [0] * n
        for w in range(n):
            for u in range(w):
                perm: dict[int, int] = {}
                ok = True
                for x in range(n):
                    if x in (u, w):
                        continue
                    a, b = m[u][x], m[w][x]
                    if perm.setdefault(a, b) != b or perm.setdefault(b, a) != a:
                        ok = False
                        break
                if ok:
                    # colours on pairs avoiding u and w must be fixed
                    moved = {a for a, b in perm.items() if a != b}
                    if moved:
                        for x in range(n):
                            if x in (u, w):
                                continue
                            row = m[x]
                            if any(row[y] in moved for y in range(x + 1, n) if y not in (u, w)):
                                ok = False
                                break
                    if ok and n > 1 and m[u][w] in moved:
                        ok = False
                if ok:
                    out[w] |= 1 << u
        return tuple(out)


def normalize(c: ColoringOfKn) -> ColoringOfKn:
    return ColoringOfKn(c.n, _normalized(c.colors), dict(c.meta))


def num_colors(c: ColoringOfKn) -> int:
    return len(set(c.colors))


def color_classes(c: ColoringOfKn) -> dict[int, list[tuple[int, int]]]:
    out: dict[int, list[tuple[int, int]]] = {}
    for e, col in zip(all_pairs(c.n), c.colors):
        out.setdefault(col, []).append(e)
    return out


@dataclass(frozen=True)
class RepresentingGraph:
    graph: Graph
    chosen: dict = field(compare=False)  # colour -> edge


def representing_graph(c: ColoringOfKn) -> RepresentingGraph:
    """One edge per colour, the lexicographically first of each class."""
    classes = color_classes(c)
    chosen = {col: es[0] for col, es in sorted(classes.items())}
    return RepresentingGraph(Graph(c.n, tuple(chosen.values())), chosen)


def count_representing_graphs(c: ColoringOfKn) -> int:
    total = 1
    for es in color_classes(c).values():
        total *= len(es)
    return total


def iter_representing_graphs(c: ColoringOfKn, limit: int = MAX_REPRESENTING_GRAPHS) -> Iterator[RepresentingGraph]:
    """Every choice of one edge per colour; refuses when there are more than ``limit``."""
    total = count_representing_graphs(c)
    if total > limit:
        raise ResourceLimitError(f"{total} representing graphs exceed the limit {limit}")
    classes = sorted(color_classes(c).items())
    cols = [col for col, _ in classes]
    for pick in product(*(es for _, es in classes)):
        yield RepresentingGraph(Graph(c.n, pick), dict(zip(cols, pick)))


class _RainbowSearch:
    def __init__(self, c: ColoringOfKn, pattern: Graph, symmetry: bool = True):
        self.m = c.matrix
        self.n = c.n
        self.p_adj = pattern.adj
        verts = [v for v in range(pattern.n) if pattern.adj[v]]
        self.order = search_order(self.p_adj, verts)
        pos = {v: i for i, v in enumerate(self.order)}
        self.back = [[u for u in self.order[:i] if self.p_adj[v] >> u & 1] for i, v in enumerate(self.order)]
        # edges still to be placed after each depth, for the colour budget
        self.edges_after = [sum(len(b) for b in self.back[i:]) for i in range(len(self.order) + 1)]
        self.symmetry = symmetry
        self.prev_twin: dict[int, int] = {}
        if symmetry:
            for i, v in enumerate(self.order):
                for u in reversed(self.order[:i]):
                    if self.p_adj[u] & ~(1 << v) == self.p_adj[v] & ~(1 << u):
                        self.prev_twin[v] = u
                        break
            self.host_twins = c.color_twin_masks
        self.total_colors = num_colors(c)
        self.pos = pos

    def run(self) -> dict[int, int] | None:
        if not self.order:
            return {}
        img: dict[int, int] = {}
        if self._rec(0, 0, 0, img):
            return img
        return None

    def _rec(self, depth: int, used: int, colors_used: int, img: dict[int, int]) -> bool:
        if depth == len(self.order):
            return True
        if self.total_colors - colors_used.bit_count() < self.edges_after[depth]:
            return False
        v = self.order[depth]
        back = self.back[depth]
        lo = img[self.prev_twin[v]] + 1 if self.symmetry and v in self.prev_twin else 0
        m = self.m
        for h in range(lo, self.n):
            bit = 1 << h
            if used & bit:
                continue
            if self.symmetry and self.host_twins[h] & ~used:
                continue
            row = m[h]
            new = colors_used
            ok = True
            for u in back:
                cb = 1 << row[img[u]]
                if new & cb:
                    ok = False
                    break
                new |= cb
            if not ok:
                continue
            img[v] = h
            if self._rec(depth + 1, used | bit, new, img):
                return True
            del img[v]
        return False


def find_rainbow_copy(c: ColoringOfKn, pattern: Graph, symmetry: bool = True) -> dict[int, int] | None:
    """Vertex map of a rainbow copy of ``pattern`` in ``c``, or None.

    Images are tried in ascending order along a fixed pattern order, so the
    witness is the first one in that lexicographic order. Isolated pattern
    vertices go to the smallest unused vertices.
    """
    if pattern.n > c.n:
        raise ValueError(f"pattern has {pattern.n} vertices, more than n={c.n}")
    if pattern.e > num_colors(c):
        return None
    emb = _RainbowSearch(c, pattern, symmetry).run()
    if emb is None:
        return None
    taken = set(emb.values())
    free = (h for h in range(c.n) if h not in taken)
    for v in pattern.isolated_vertices():
        emb[v] = next(free)
    return emb


def has_rainbow_copy(c: ColoringOfKn, pattern: Graph) -> bool:
    return find_rainbow_copy(c, pattern) is not None


def is_rainbow_embedding(c: ColoringOfKn, pattern: Graph, emb: dict[int, int]) -> bool:
    if len(set(emb.values())) != len(emb):
        return False
    cols = [c.color(emb[u], emb[v]) for u, v in pattern.edges]
    return len(set(cols)) == len(cols)


def is_family_free(c: ColoringOfKn, family: Iterable[Graph]) -> bool:
    return all(find_rainbow_copy(c, g) is None for g in family)


def rainbow_violation(c: ColoringOfKn, family: Iterable[Graph]) -> tuple[Graph, dict[int, int]] | None:
    """First member with a rainbow copy, together with its witness."""
    for g in family:
        emb = find_rainbow_copy(c, g)
        if emb is not None:
            return g, emb
    return None


# -- JSON ------------------------------------------------------------------

def coloring_to_dict(c: ColoringOfKn) -> dict:
    return {"n": c.n, "edges": [[u, v, col] for (u, v), col in zip(all_pairs(c.n), c.colors)]}


def coloring_from_dict(data: dict, strict: bool = True) -> ColoringOfKn:
    """Read the {"n", "edges": [[u, v, colour], ...]} document.

    Every pair must appear exactly once. With ``strict`` the colours must
    already be normalized; otherwise they are renumbered.
    """
    n = data.get("n")
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"bad vertex count {n!r}")
    colors: dict[tuple[int, int], int] = {}
    for item in data.get("edges", []):
        if len(item) != 3:
            raise ValueError(f"edge entry must be [u, v, colour], got {item!r}")
        u, v, col = item
        if not (isinstance(u, int) and isinstance(v, int) and isinstance(col, int)):
            raise ValueError(f"non-integer entry {item!r}")
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"bad pair ({u}, {v}) for n={n}")
        key = (min(u, v), max(u, v))
        if key in colors:
            raise ValueError(f"pair {key} listed twice")
        if col < 0:
            raise ValueError(f"negative colour on {key}")
        colors[key] = col
    missing = [e for e in all_pairs(n) if e not in colors]
    if missing:
        raise ValueError(f"{len(missing)} pairs have no colour, first {missing[0]}")
    seq = tuple(colors[e] for e in all_pairs(n))
    if strict and seq != _normalized(seq):
        raise ValueError("colours are not normalized (expected 0, 1, ... by first appearance)")
    return ColoringOfKn(n, _normalized(seq))


def dump_coloring(c: ColoringOfKn) -> str:
    return json.dumps(coloring_to_dict(c), separators=(",", ":"))


def save_coloring(c: ColoringOfKn, path: str | Path):
    Path(path).write_text(dump_coloring(c) + "\n")


def load_coloring(path: str | Path, strict: bool = True) -> ColoringOfKn:
    return coloring_from_dict(json.loads(Path(path).read_text()), strict)
