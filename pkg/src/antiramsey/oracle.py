"""Exact anti-Ramsey numbers of small complete graphs by branch and bound.

Edges of K_n are coloured in lexicographic order as a restricted growth
string (each edge reuses a colour already present or opens the next one),
which removes colour-renaming symmetry. Two prunes apply: a branch dies once
a copy of a member lying entirely in the coloured prefix is rainbow, and
once even all-new colours on the remaining edges cannot beat the best
colouring found.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .colorings import ColoringOfKn, coloring_to_dict, edge_index, is_family_free, num_colors
from .errors import ContractViolation
from .graph import Graph, complete, strip_isolated
from .subgraph import edge_images

log = logging.getLogger(__name__)

MAX_ORACLE_EDGES = 28
DEFAULT_BUDGET = 50_000_000


@dataclass
class ArResult:
    n: int
    lower: int
    upper: int
    witness: ColoringOfKn | None
    nodes: int
    status: str  # exact | budget-exhausted
    stats: dict = field(default_factory=dict)

    @property
    def value(self) -> int | None:
        return self.lower if self.status == "exact" else None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "status": self.status,
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "nodes": self.nodes,
            "witness": coloring_to_dict(self.witness) if self.witness is not None else None,
            "stats": self.stats,
        }


class _Budget(Exception):
    pass


def _check_family(n: int, family: list[Graph]):
    if not family:
        raise ValueError("family is empty")
    for g in family:
        if g.e < 2:
            raise ValueError(f"member with {g.e} edges: every colouring contains it rainbow, AR is undefined")
        if g.n > n:
            raise ValueError(f"member on {g.n} vertices does not fit in K_{n}")


def copies_by_last_edge(n: int, family: list[Graph]) -> list[list[tuple[int, ...]]]:
    """Edge-index sets of every copy of every member in K_n, grouped by their
    largest edge index."""
    m = n * (n - 1) // 2
    out: list[list[tuple[int, ...]]] = [[] for _ in range(m)]
    host = complete(n)
    for g in family:
        for image in edge_images(strip_isolated(g), host):
            idx = tuple(sorted(edge_index(n, u, v) for u, v in image))
            out[idx[-1]].append(idx)
    return out


def ar_exact(
    n: int,
    family,
    budget: int = DEFAULT_BUDGET,
    prune_rainbow: bool = True,
    prune_bound: bool = True,
    progress=None,
) -> ArResult:
    """Maximum number of colours on K_n with no rainbow member of ``family``.

    ``budget`` caps search-tree nodes; when it runs out the result carries
    the best colouring found and an upper bound from the unexplored branches.
    ``progress`` is called with (best, nodes) whenever the best improves.
    """
    family = list(family)
    _check_family(n, family)
    m = n * (n - 1) // 2
    if m > MAX_ORACLE_EDGES:
        raise ValueError(f"oracle limited to {MAX_ORACLE_EDGES} edges, K_{n} has {m}")
    by_last = copies_by_last_edge(n, family)
    all_copies = [c for group in by_last for c in group]
    colors = [0] * m
    best = [1, [0] * m]  # one colour is always free of rainbow members with >= 2 edges
    nodes = [0]
    frame_bounds: list[int] = []

    def rainbow(copy) -> bool:
        seen = set()
        for i in copy:
            c = colors[i]
            if c in seen:
                return False
            seen.add(c)
        return True

    def rec(i: int, k: int):
        # k colours used on edges 0..i-1
        if i == m:
            if not prune_rainbow and any(rainbow(c) for c in all_copies):
                return
            if k > best[0]:
                best[0], best[1] = k, colors[:]
                if progress:
                    progress(k, nodes[0])
            return
        nodes[0] += 1
        if nodes[0] > budget:
            raise _Budget
        if prune_bound and k + (m - i) <= best[0]:
            return
        frame_bounds.append(k + (m - i))
        # the new colour first, so good colourings turn up early
        for c in [k, *range(k)]:
            colors[i] = c
            if prune_rainbow and any(rainbow(cp) for cp in by_last[i]):
                continue
            rec(i + 1, max(k, c + 1))
        frame_bounds.pop()

    status = "exact"
    try:
        rec(0, 0)
        upper = best[0]
    except _Budget:
        status = "budget-exhausted"
        upper = max([best[0]] + frame_bounds)
        nodes[0] -= 1
    witness = ColoringOfKn.from_labels(n, best[1])
    if not is_family_free(witness, family):
        raise ContractViolation("oracle witness contains a rainbow member")
    if num_colors(witness) != best[0]:
        raise ContractViolation("oracle witness colour count disagrees with its value")
    return ArResult(n, best[0], upper, witness, nodes[0], status, {"copies": len(all_copies), "edges": m})


def ar_lower_from_construction(c: ColoringOfKn, family) -> int:
    """Colour count of ``c``, a lower bound on AR(n, family) once ``c`` is checked free."""
    if not is_family_free(c, family):
        raise ContractViolation("construction contains a rainbow member of the family")
    return num_colors(c)


def ar_cross_check(n: int, family, formula_value: int, budget: int = DEFAULT_BUDGET) -> dict:
    """Compare the oracle at n with a formula value; the formula is not assumed to hold at small n."""
    res = ar_exact(n, family, budget)
    if res.status != "exact":
        relation = "undetermined"
        if res.upper < formula_value:
            relation = "oracle-below"
        elif res.lower > formula_value:
            relation = "oracle-above"
    elif res.lower == formula_value:
        relation = "equal"
    else:
        relation = "oracle-below" if res.lower < formula_value else "oracle-above"
    return {"n": n, "formula": formula_value, "oracle": res.to_dict(), "relation": relation}


def monochromatic(n: int) -> ColoringOfKn:
    return ColoringOfKn(n, (0,) * (n * (n - 1) // 2))


def rainbow_coloring(n: int) -> ColoringOfKn:
    return ColoringOfKn(n, tuple(range(n * (n - 1) // 2)))

