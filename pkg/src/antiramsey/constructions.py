"""Explicit extremal colourings: rainbow Turan-type graphs plus a few extra colours."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterator, Sequence

from .colorings import ColoringOfKn, all_pairs, is_family_free
from .errors import ContractViolation, InfeasibleError
from .gadgets import regular_graph
from .graph import Graph, parts_of, turan_part_sizes

log = logging.getLogger(__name__)


def _build(n: int, classes: list[list[int]], rainbow_intra: set[tuple[int, int]], label_of) -> ColoringOfKn:
    """Colour cross-class pairs and ``rainbow_intra`` pairs with distinct
    colours; every other pair gets ``("x", label_of(u, v))``."""
    where = {}
    for i, part in enumerate(classes):
        for v in part:
            where[v] = i
    labels = []
    for u, v in all_pairs(n):
        if where.get(u) != where.get(v) or (u, v) in rainbow_intra:
            labels.append(("r", u, v))
        else:
            labels.append(("x", label_of(u, v)))
    return ColoringOfKn.from_labels(n, labels)


def construct_kp_extremal(n: int, p: int) -> ColoringOfKn:
    """Rainbow T(n, p) with every pair inside a class in one extra colour."""
    if not n >= p >= 2:
        raise ValueError(f"need n >= p >= 2, got n={n}, p={p}")
    if n == p:
        log.warning("T(%d, %d) has no pairs inside classes; no extra colour is used", n, p)
    classes = parts_of(turan_part_sizes(n, p))
    return _build(n, classes, set(), lambda u, v: 0)


def _apex_classes(n: int, p: int, apex: int) -> list[list[int]]:
    """Apex vertices 0..apex-1 as singleton classes, then T(n - apex, p)."""
    sizes = turan_part_sizes(n - apex, p)
    rest = [[v + apex for v in part] for part in parts_of(sizes)]
    return [[v] for v in range(apex)] + rest


def _check_apex_params(n: int, p: int, k: int):
    if p < 2 or k < 2:
        raise ValueError(f"need p >= 2 and k >= 2, got p={p}, k={k}")
    if n - k + 2 < 2 * p:
        raise ValueError(f"T({n - k + 2}, {p}) has a class with fewer than 2 vertices; need n >= 2p + k - 2")


def construct_h_coloring(n: int, p: int, k: int) -> ColoringOfKn:
    """Rainbow K_{k-2} joined to T(n-k+2, p); pairs inside classes share one extra colour."""
    _check_apex_params(n, p, k)
    a = k - 2
    classes = _apex_classes(n, p, a)
    return _build(n, classes, set(), lambda u, v: 0)


def h_prime_slots(n: int, p: int, k: int) -> list[str]:
    """Names of the extra-colour slots: the p Turan classes, then each pair
    of the independent apex set."""
    _check_apex_params(n, p, k)
    return [f"class{i}" for i in range(p)] + [f"apex{u}-{v}" for u, v in combinations(range(k - 2), 2)]


def construct_h_prime_coloring(n: int, p: int, k: int, labels: Sequence[Hashable]) -> ColoringOfKn:
    """Rainbow independent (k-2)-set joined to T(n-k+2, p).

    ``labels`` gives an extra-colour label per slot of :func:`h_prime_slots`;
    equal labels mean equal colours. Extra colours never coincide with the
    rainbow ones.
    """
    slots = h_prime_slots(n, p, k)
    if len(labels) != len(slots):
        raise ValueError(f"need {len(slots)} labels ({', '.join(slots)}), got {len(labels)}")
    a = k - 2
    classes = [[v + a for v in part] for part in parts_of(turan_part_sizes(n - a, p))]
    apex_class = list(range(a))
    class_of = {}
    for i, part in enumerate(classes):
        for v in part:
            class_of[v] = i
    pair_slot = {pair: p + j for j, pair in enumerate(combinations(range(a), 2))}

    def label_of(u, v):
        if u < a:
            return labels[pair_slot[(u, v)]]
        return labels[class_of[u]]

    c = _build(n, [apex_class] + classes, set(), label_of)
    c.meta["labels"] = list(labels)
    return c


@dataclass
class QResult:
    q: int
    labels: list[int] | None
    n: int
    q_next: int | None = None
    n_next: int | None = None
    partitions_checked: int = 0

    @property
    def stable(self) -> bool | None:
        return None if self.q_next is None else self.q == self.q_next

    def to_dict(self) -> dict:
        return {
            "q": self.q, "labels": self.labels, "n": self.n,
            "q_next": self.q_next, "n_next": self.n_next, "stable": self.stable,
            "partitions_checked": self.partitions_checked,
        }


def _refinements(rgs: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Partitions obtained by splitting one block in two, as restricted growth strings."""
    blocks: dict[int, list[int]] = {}
    for i, b in enumerate(rgs):
        blocks.setdefault(b, []).append(i)
    fresh = max(rgs) + 1
    for members in blocks.values():
        if len(members) < 2:
            continue
        rest = members[1:]
        for r in range(1, len(rest) + 1):
            for moved in combinations(rest, r):
                lab = list(rgs)
                for i in moved:
                    lab[i] = fresh
                yield _rgs(lab)


def _rgs(labels: Sequence[int]) -> tuple[int, ...]:
    names: dict[int, int] = {}
    return tuple(names.setdefault(x, len(names)) for x in labels)


def _q_at(n: int, p: int, k: int, family) -> tuple[int, list[int] | None, int]:
    slots = h_prime_slots(n, p, k)
    level = {(0,) * len(slots)}
    best: tuple[int, list[int] | None] = (0, None)
    checked = 0
    while level:
        free = []
        for rgs in sorted(level):
            checked += 1
            if is_family_free(construct_h_prime_coloring(n, p, k, rgs), family):
                free.append(rgs)
        if not free:
            break
        best = (max(free[0]) + 1, list(free[0]))
        # merging colours cannot create a rainbow copy, so only refine free partitions
        level = {r for rgs in free for r in _refinements(rgs)}
    return best[0], best[1], checked


def default_q_n(p: int, k: int, family) -> int:
    return max(max(g.n for g in family) + 2, 2 * p + k - 2)


def max_extra_colors(p: int, k: int, family, n: int | None = None) -> QResult:
    """Largest number of extra colours on the slots that keeps the construction free
    of rainbow members, at ``n`` and again at ``n + p``.

    q = 0 means even a single extra colour fails.
    """
    family = list(family)
    if not family:
        raise ValueError("empty family")
    if n is None:
        n = default_q_n(p, k, family)
    q, labels, checked = _q_at(n, p, k, family)
    q2, _, checked2 = _q_at(n + p, p, k, family)
    return QResult(q, labels, n, q2, n + p, checked + checked2)


def class_sizes_for(n: int, p: int, sizes: Sequence[int] | None, k: int) -> tuple[list[int], dict]:
    meta: dict = {}
    if sizes is None:
        return turan_part_sizes(n, p), meta
    sizes = list(sizes)
    if len(sizes) != p or sum(sizes) != n or any(s < 1 for s in sizes):
        raise ValueError(f"sizes {sizes} must be {p} positive entries summing to {n}")
    if sizes != sorted(sizes, reverse=True):
        raise ValueError(f"sizes must be listed largest first, got {sizes}")
    if sizes[0] - sizes[-1] != 2:
        raise ValueError(f"need n_1 - n_p = 2, got {sizes}")
    if k % 2 == 0 and (sizes[0] % 2 or sizes[-1] % 2):
        raise ValueError(f"n_1 and n_p must be even when k is even, got {sizes}")
    meta["sizes_reading"] = "n_1 - n_p = 2 with n_1, n_p even when k is even, taken literally"
    return sizes, meta


def construct_gadget_coloring(
    n: int, k: int, p: int, sizes: Sequence[int] | None = None, triangle_free: bool = True
) -> ColoringOfKn:
    """Rainbow complete p-partite graph with a (k-1)-regular gadget in each class.

    Cross pairs and gadget edges are rainbow; the rest of class i gets its own
    extra colour. Gadgets are triangle-free unless ``triangle_free`` is off.
    """
    if p < 2 or k < 1:
        raise ValueError(f"need p >= 2 and k >= 1, got p={p}, k={k}")
    sizes, meta = class_sizes_for(n, p, sizes, k)
    classes = parts_of(sizes)
    rainbow = set()
    for part in classes:
        g = regular_graph(len(part), k - 1, triangle_free)
        if g.e == len(part) * (len(part) - 1) // 2:
            raise InfeasibleError(f"gadget fills a class of size {len(part)}; no pairs left for its extra colour")
        rainbow.update((part[u], part[v]) for u, v in g.edges)
    where = {v: i for i, part in enumerate(classes) for v in part}
    c = _build(n, classes, rainbow, lambda u, v: where[u])
    c.meta.update(meta, gadget_degree=k - 1, sizes=sizes)
    return c


def construct_gadget_extremal(n: int, p: int, k: int, sizes: Sequence[int] | None = None) -> ColoringOfKn:
    """Extremal colouring for families built around Q(p, k): gadget degree k-2."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    return construct_gadget_coloring(n, k - 1, p, sizes)


def construct_exceptional_k3(n: int) -> ColoringOfKn:
    """Rainbow T(n, 2) plus a 2-regular graph (triangles allowed) in the first
    class, everything else inside the classes in one extra colour."""
    if n % 4 != 2 or n < 10:
        raise ValueError(f"need n = 2 mod 4 and n >= 10, got {n}")
    classes = parts_of(turan_part_sizes(n, 2))
    g = regular_graph(len(classes[0]), 2, triangle_free=False)
    part = classes[0]
    rainbow = {(part[u], part[v]) for u, v in g.edges}
    c = _build(n, classes, rainbow, lambda u, v: 0)
    c.meta["gadget_class"] = 0
    return c


def petersen_coloring(n: int) -> ColoringOfKn:
    """Two extra colours, one per class, over a rainbow K_1 joined to T(n-1, 2)."""
    return construct_h_prime_coloring(n, 2, 3, [0, 1])


def ensure_free(c: ColoringOfKn, family) -> ColoringOfKn:
    if not is_family_free(c, family):
        raise ContractViolation("colouring contains a rainbow member of the family")
    return c


def gadget_host(n: int, p: int, k: int, triangle_free: bool = True) -> Graph:
    """Turan graph T(n, p) with a (k-1)-regular gadget added in each class."""
    classes = parts_of(turan_part_sizes(n, p))
    edges = [(u, v) for a, b in combinations(classes, 2) for u in a for v in b]
    for part in classes:
        g = regular_graph(len(part), k - 1, triangle_free)
        edges.extend((part[u], part[v]) for u, v in g.edges)
    return Graph(n, tuple(edges))
