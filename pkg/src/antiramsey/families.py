"""Graph families up to isomorphism and the decomposition machinery.

A decomposition family of ``L`` (subchromatic number p) is the set of minimal
graphs M such that some member of ``L`` fits into (M + independent set) joined
with a complete (p-1)-partite graph. Instead of building that host we use the
split test: a vertex set S of L whose complement is (p-1)-colourable, with
L[S] the part that has to land inside M.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .canon import CanonicalForm, canonical_form, canonical_graph
from .chromatic import chromatic_number, is_colorable
from .errors import ResourceLimitError
from .graph import (
    Graph, complement, complete, delete_edges, disjoint_union, empty, induced_subgraph,
    matching, star, strip_isolated, turan_part_sizes,
)
from .graph6 import to_string
from .subgraph import contains_subgraph, edge_images

log = logging.getLogger(__name__)

MAX_DECOMPOSE_VERTICES = 20
MAX_ENUMERATE_VERTICES = 7


@dataclass(frozen=True)
class GraphFamily:
    """Finite family of pairwise non-isomorphic graphs.

    Members are kept in a deterministic order (vertices, edges, canonical
    form) and compare equal as sets of isomorphism classes.
    """
    members: tuple[Graph, ...] = ()
    forms: tuple[CanonicalForm, ...] = field(default=(), repr=False)

    @classmethod
    def of(cls, graphs: Iterable[Graph]) -> GraphFamily:
        seen: dict[CanonicalForm, Graph] = {}
        for g in graphs:
            seen.setdefault(canonical_form(g), g)
        keyed = sorted(seen.items(), key=lambda kv: (kv[1].n, kv[1].e, kv[0]))
        return cls(tuple(g for _, g in keyed), tuple(f for f, _ in keyed))

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: Graph) -> bool:
        return canonical_form(g) in self.forms

    def __eq__(self, other):
        if not isinstance(other, GraphFamily):
            return NotImplemented
        return set(self.forms) == set(other.forms)

    def __hash__(self):
        return hash(frozenset(self.forms))

    def stripped(self) -> GraphFamily:
        """Same family with isolated vertices removed from each member."""
        return GraphFamily.of(strip_isolated(g) for g in self.members)

    def to_graph6(self) -> list[str]:
        return [to_string(g) for g in self.members]

    def is_edgeless(self) -> bool:
        return all(g.e == 0 for g in self.members)


def minus_one_edge(f: GraphFamily) -> GraphFamily:
    out = []
    for g in f:
        if g.e == 0:
            raise ValueError(f"member {to_string(g)} has no edge to delete")
        out.extend(delete_edges(g, [e]) for e in g.edges)
    return GraphFamily.of(out)


def subchromatic(f: GraphFamily) -> int:
    if not len(f):
        raise ValueError("subchromatic number of an empty family is undefined")
    return min(chromatic_number(g) for g in f) - 1


def _capacity_colorable(g: Graph, verts: int, caps: list[int]) -> bool:
    """Proper colouring of g[verts] whose class i has at most caps[i] vertices."""
    order = sorted((v for v in range(g.n) if verts >> v & 1), key=lambda v: -g.degrees[v])
    if sum(caps) < len(order):
        return False
    adj = g.adj
    classes = [0] * len(caps)
    load = [0] * len(caps)

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        tried = set()
        for c in range(len(caps)):
            # empty classes with equal capacity are interchangeable
            if not load[c] and caps[c] in tried:
                continue
            if load[c] >= caps[c] or classes[c] & adj[v]:
                continue
            if not load[c]:
                tried.add(caps[c])
            classes[c] |= 1 << v
            load[c] += 1
            if rec(i + 1):
                return True
            classes[c] &= ~(1 << v)
            load[c] -= 1
        return False

    return rec(0)


def embeds_with_padding(l: Graph, m: Graph, p: int, t: int) -> bool:
    """Is ``l`` a subgraph of (m + t isolated vertices) joined with T(t, p-1)?

    Decided by the split test; the class sizes of T(t, p-1) are respected.
    """
    if p < 1 or t < 0:
        raise ValueError(f"need p >= 1 and t >= 0, got p={p}, t={t}")
    caps = turan_part_sizes(t, p - 1) if p > 1 else []
    host_side = disjoint_union(m, empty(t))
    full = (1 << l.n) - 1
    for s in range(full + 1):
        if s.bit_count() > host_side.n:
            continue
        if not _capacity_colorable(l, full & ~s, caps):
            continue
        if contains_subgraph(induced_subgraph(l, _members(s)), host_side):
            return True
    return False


def _members(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def split_candidates(l: Graph, p: int) -> list[Graph]:
    """L[S] (isolated vertices stripped) for every inclusion-minimal S whose
    complement in L is (p-1)-colourable."""
    if l.n > MAX_DECOMPOSE_VERTICES:
        raise ResourceLimitError(f"decomposition limited to {MAX_DECOMPOSE_VERTICES} vertices, got {l.n}")
    full = (1 << l.n) - 1
    minimal: list[int] = []
    by_size = sorted(range(full + 1), key=lambda s: (s.bit_count(), s))
    for s in by_size:
        if any(s & a == a for a in minimal):
            continue
        if is_colorable(l, p - 1, full & ~s):
            minimal.append(s)
    return [strip_isolated(induced_subgraph(l, _members(s))) for s in minimal]


def minimal_elements(graphs: Iterable[Graph]) -> GraphFamily:
    """Members not containing another member as a proper subgraph."""
    pool = sorted(GraphFamily.of(graphs), key=lambda g: (g.e, g.n))
    kept: list[Graph] = []
    for g in pool:
        if not any(contains_subgraph(h, g) for h in kept):
            kept.append(g)
    return GraphFamily.of(kept)


def decomposition_family(f: GraphFamily, p: int | None = None) -> GraphFamily:
    """Minimal graphs whose placement inside one Turan class creates a member.

    ``p`` defaults to the subchromatic number of ``f``.
    """
    if not len(f):
        raise ValueError("decomposition family of an empty family")
    if p is None:
        p = subchromatic(f)
    if p < 1:
        raise ValueError(f"decomposition needs subchromatic number >= 1, got {p}")
    cands = [c for g in f for c in split_candidates(g, p)]
    return minimal_elements(cands)


def decomposition_remainder(f: GraphFamily, m: GraphFamily) -> GraphFamily:
    """Members of f with the edges of one embedded copy of a member of m
    removed, over all members and all embeddings."""
    out = []
    for g in f:
        for piece in m:
            for image in edge_images(strip_isolated(piece), g):
                out.append(delete_edges(g, image))
    res = GraphFamily.of(out)
    if not len(res):
        log.warning("decomposition remainder is empty: no member of m embeds")
    return res


@dataclass(frozen=True)
class Stage:
    family: GraphFamily
    decomposition: GraphFamily
    p: int


@dataclass(frozen=True)
class DecompositionSequence:
    stages: tuple[Stage, ...]
    p0: int
    status: str  # complete | edgeless | empty | error
    detail: str = ""

    @property
    def decompositions(self) -> list[GraphFamily]:
        return [s.decomposition for s in self.stages]

    @property
    def families(self) -> list[GraphFamily]:
        return [s.family for s in self.stages]

    def to_dict(self) -> dict:
        return {
            "p0": self.p0,
            "status": self.status,
            "detail": self.detail,
            "stages": [
                {
                    "index": i,
                    "p": s.p,
                    "family": s.family.to_graph6(),
                    "family_size": len(s.family),
                    "decomposition": s.decomposition.to_graph6(),
                    "decomposition_size": len(s.decomposition),
                }
                for i, s in enumerate(self.stages)
            ],
        }


class SequenceError(ResourceLimitError):
    def __init__(self, msg: str, partial: DecompositionSequence):
        super().__init__(msg)
        self.partial = partial


def decomposition_sequence(
    f: GraphFamily, length: int | None = None, reevaluate_p: bool = True
) -> DecompositionSequence:
    """Alternate decomposition and remainder starting from ``f``.

    With ``reevaluate_p`` each stage uses the subchromatic number of its own
    family; otherwise the stage-0 value is kept throughout. Stops early when
    a stage family is empty or edgeless, or when p drops below 1.
    """
    p0 = subchromatic(f)
    if length is None:
        length = p0 + 1
    stages: list[Stage] = []
    fam = f
    status = "complete"
    try:
        for _ in range(length):
            if not len(fam):
                status = "empty"
                break
            if fam.is_edgeless():
                status = "edgeless"
                break
            p = subchromatic(fam) if reevaluate_p else p0
            if p < 1:
                status = "edgeless"
                break
            dec = decomposition_family(fam, p)
            stages.append(Stage(fam, dec, p))
            fam = decomposition_remainder(fam, dec)
    except ResourceLimitError as exc:
        raise SequenceError(str(exc), DecompositionSequence(tuple(stages), p0, "error", str(exc))) from exc
    return DecompositionSequence(tuple(stages), p0, status)


@lru_cache(maxsize=None)
def _graphs_by_edges(n: int) -> tuple[tuple[Graph, ...], ...]:
    """Isomorphism class representatives on n vertices, grouped by edge count,
    built by adding one edge at a time."""
    top = n * (n - 1) // 2
    levels = [(canonical_graph(Graph(n)),)]
    half = top // 2
    for _ in range(half):
        seen: dict[CanonicalForm, Graph] = {}
        for g in levels[-1]:
            for u, v in combinations(range(n), 2):
                if not g.has_edge(u, v):
                    h = Graph(n, g.edges + ((u, v),))
                    f = canonical_form(h)
                    if f not in seen:
                        seen[f] = canonical_graph(h)
        levels.append(tuple(seen[k] for k in sorted(seen)))
    for e in range(half + 1, top + 1):
        levels.append(tuple(canonical_graph(complement(g)) for g in levels[top - e]))
    return tuple(levels)


def all_graphs(n: int, e: int) -> GraphFamily:
    """Every isomorphism class with n vertices and e edges (n at most 7)."""
    if n > MAX_ENUMERATE_VERTICES:
        raise ResourceLimitError(f"graph enumeration limited to {MAX_ENUMERATE_VERTICES} vertices, got {n}")
    if n < 0 or not 0 <= e <= n * (n - 1) // 2:
        raise ValueError(f"no graphs with n={n}, e={e}")
    return GraphFamily.of(_graphs_by_edges(n)[e])


@dataclass
class CheckLine:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class K5Report:
    lines: list[CheckLine]
    sequence: DecompositionSequence

    @property
    def passed(self) -> bool:
        return all(line.passed for line in self.lines)

    def table(self) -> str:
        out = [f"{'check':<34} {'result':<6} detail"]
        for line in self.lines:
            out.append(f"{line.name:<34} {'PASS' if line.passed else 'FAIL':<6} {line.detail}")
        out.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(out)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.lines],
            "sequence": self.sequence.to_dict(),
        }


def _describe(f: GraphFamily) -> str:
    return "{" + ", ".join(to_string(g) for g in f) + "}"


def k5_determination_check(reevaluate_p: bool = True) -> K5Report:
    """Compute the sequence of {K5}, compare it with the expected table and
    replay the reconstruction of K5 from the last stage backwards."""
    k5 = GraphFamily.of([complete(5)])
    seq = decomposition_sequence(k5, reevaluate_p=reevaluate_p)
    g = {e: all_graphs(5, e) for e in (6, 8, 9, 10)}
    expected = [
        GraphFamily.of([complete(2)]),
        GraphFamily.of([complete(2)]),
        GraphFamily.of([star(3), matching(4)]).stripped(),
        g[6].stripped(),
    ]
    lines = [CheckLine("recorded stages", len(seq.stages) == 4, f"{len(seq.stages)} (status {seq.status})")]
    for i, want in enumerate(expected):
        got = seq.stages[i].decomposition if i < len(seq.stages) else GraphFamily()
        lines.append(CheckLine(
            f"M{i}", got == want, f"got {len(got)} {_describe(got) if len(got) < 6 else ''} want {len(want)}"
        ))

    # replay: the last decomposition pins down the stage-3 family, and each
    # earlier family is the edge-count class whose remainder is the next one
    m3 = seq.stages[3].decomposition if len(seq.stages) > 3 else GraphFamily()
    f3_ok = decomposition_family(g[6], 1) == m3 and all(h.n == 5 for h in g[6])
    lines.append(CheckLine("F3 = G(5,6)", f3_ok and _stage_family(seq, 3) == g[6], "decomposition of G(5,6) matches M3"))
    for i, (e_hi, e_lo) in enumerate([(8, 6), (9, 8), (10, 9)]):
        idx = 2 - i
        m = seq.stages[idx].decomposition if len(seq.stages) > idx else GraphFamily()
        rem = decomposition_remainder(g[e_hi], m) if len(m) else GraphFamily()
        ok = rem == g[e_lo] and _stage_family(seq, idx) == g[e_hi]
        lines.append(CheckLine(f"F{idx} = G(5,{e_hi})", ok, f"remainder by M{idx} gives {len(rem)} classes, |G(5,{e_lo})| = {len(g[e_lo])}"))
    lines.append(CheckLine("G(5,10) = {K5}", g[10] == k5, ""))
    return K5Report(lines, seq)


def _stage_family(seq: DecompositionSequence, i: int) -> GraphFamily:
    return seq.stages[i].family if i < len(seq.stages) else GraphFamily()
