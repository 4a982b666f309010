"""Closed-form anti-Ramsey values and an end-to-end checker for the matching constructions.

All arithmetic is integer-exact. Formula names:

* ``clique``    AR(n, K_{p+2}) = t(n, p) + 1
* ``h-prime``   h'(n, p, k-1) + q, families whose first decomposition is {M_2k}
* ``h``         h(n, p, k-1) + 1, first two decompositions {M_2}, {M_{2k-2}}
* ``cliques``   k disjoint copies of K_{p+1}
* ``petersen``  the Petersen graph
* ``gadget``    families containing Q(p, k): t(n, p) + sum floor((k-2) n_i / 2) + p
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb

from .colorings import ColoringOfKn, num_colors, rainbow_violation
from .constructions import (
    construct_exceptional_k3, construct_gadget_extremal, construct_h_coloring,
    construct_h_prime_coloring, construct_kp_extremal, h_prime_slots, max_extra_colors,
    petersen_coloring,
)
from .counts import h_count, h_prime_count, turan_count
from .errors import ResourceLimitError
from .families import GraphFamily, decomposition_sequence, minus_one_edge, subchromatic
from .graph import Graph, complete, copies, matching, petersen, q_graph, star, turan_part_sizes
from .graph6 import to_string
from .subgraph import contains_subgraph


@dataclass(frozen=True)
class FormulaParams:
    n: int
    p: int
    k: int = 2
    q: int | None = None

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"need p >= 2, got {self.p}")
        if self.k < 2:
            raise ValueError(f"need k >= 2, got {self.k}")
        if self.q is not None and self.q < 1:
            raise ValueError(f"need q >= 1, got {self.q}")
        if self.n < 1:
            raise ValueError(f"need n >= 1, got {self.n}")


def ar_turan_clique(n: int, p: int) -> int:
    if p < 1 or n < 1:
        raise ValueError(f"need n, p >= 1, got n={n}, p={p}")
    return turan_count(n, p) + 1


def ar_h_prime(params: FormulaParams) -> int:
    if params.q is None:
        raise ValueError("the h-prime formula needs q")
    return h_prime_count(params.n, params.p, params.k - 1) + params.q


def ar_h(params: FormulaParams) -> int:
    return h_count(params.n, params.p, params.k - 1) + 1


def ar_disjoint_cliques(n: int, p: int, k: int) -> int:
    FormulaParams(n, p, k)
    return h_prime_count(n, p, k - 1) + comb(k - 2, 2) + 1


def ar_petersen(n: int) -> int:
    if n < 10:
        raise ValueError(f"need n >= 10, got {n}")
    return ((n - 1) // 2) * ((n - 1) - (n - 1) // 2) + n + 1


def ar_gadget(n: int, p: int, k: int) -> int:
    FormulaParams(n, p, k)
    return turan_count(n, p) + sum((k - 2) * s // 2 for s in turan_part_sizes(n, p)) + p


FORMULA_NAMES = ("clique", "h-prime", "h", "cliques", "petersen", "gadget")


def evaluate(name: str, n: int, p: int = 2, k: int = 2, q: int | None = None) -> int:
    if name == "clique":
        return ar_turan_clique(n, p)
    if name == "h-prime":
        return ar_h_prime(FormulaParams(n, p, k, q))
    if name == "h":
        return ar_h(FormulaParams(n, p, k))
    if name == "cliques":
        return ar_disjoint_cliques(n, p, k)
    if name == "petersen":
        return ar_petersen(n)
    if name == "gadget":
        return ar_gadget(n, p, k)
    raise ValueError(f"unknown formula {name!r}; choose from {', '.join(FORMULA_NAMES)}")


# -- verification ----------------------------------------------------------

@dataclass
class Clause:
    id: str
    expected: object
    actual: object
    passed: bool


@dataclass
class Report:
    theorem: str
    params: dict
    family: list[str]
    clauses: list[Clause] = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.clauses)

    def add(self, cid: str, expected, actual, passed: bool | None = None):
        self.clauses.append(Clause(cid, expected, actual, expected == actual if passed is None else passed))

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "family": self.family,
            "passed": self.passed,
            "error": self.error,
            "clauses": [asdict(c) for c in self.clauses],
        }

    def table(self) -> str:
        rows = [(c.id, str(c.expected), str(c.actual), "PASS" if c.passed else "FAIL") for c in self.clauses]
        head = ("clause", "expected", "actual", "result")
        widths = [max(len(r[i]) for r in rows + [head]) for i in range(4)]
        fmt = "  ".join(f"{{:<{w}}}" for w in widths)
        out = [fmt.format(*head)] + [fmt.format(*r) for r in rows]
        if self.error:
            out.append(f"error: {self.error}")
        out.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(out)


def default_family(name: str, p: int, k: int) -> list[Graph]:
    if name == "clique":
        return [complete(p + 2)]
    if name == "cliques":
        return [copies(k, complete(p + 1))]
    if name == "petersen":
        return [petersen()]
    if name == "gadget":
        return [q_graph(p, k)]
    if name == "h":
        return [complete(p + 2)]
    raise ValueError(f"formula {name!r} has no default family; pass one")


def _family_clauses(rep: Report, fam: GraphFamily, p: int, m0: Graph | None, m1: Graph | None = None):
    pm = subchromatic(minus_one_edge(fam))
    rep.add("p(F-) = p", p, pm)
    stages = 2 if m1 is not None else 1
    seq = decomposition_sequence(fam, length=stages)
    got = seq.decompositions
    if m0 is not None:
        want = GraphFamily.of([m0]).stripped()
        rep.add("M0", want.to_graph6(), got[0].to_graph6() if got else [], bool(got) and got[0] == want)
    if m1 is not None:
        want = GraphFamily.of([m1]).stripped()
        ok = len(got) > 1 and got[1] == want
        rep.add("M1", want.to_graph6(), got[1].to_graph6() if len(got) > 1 else [], ok)
    return seq


def _freeness(rep: Report, c: ColoringOfKn, family, cid: str = "family-free"):
    bad = rainbow_violation(c, family)
    rep.add(cid, True, bad is None)
    if bad is not None:
        rep.clauses[-1].actual = f"rainbow {to_string(bad[0])} at {sorted(bad[1].items())}"


def verify_theorem(name: str, params: FormulaParams, family=None) -> Report:
    """Build the extremal colouring for ``name``, check its colour count
    against the formula, check it has no rainbow member, and evaluate the
    family hypotheses (decompositions, p of the one-edge-deleted family,
    Q(p, k) containment)."""
    n, p, k = params.n, params.p, params.k
    family = list(family) if family is not None else default_family(name, p, k)
    rep = Report(name, asdict(params), [to_string(g) for g in family])
    fam = GraphFamily.of(family)
    try:
        if name == "clique":
            c = construct_kp_extremal(n, p)
            rep.add("colours = t(n,p)+1", ar_turan_clique(n, p), num_colors(c))
            rep.add("p(F-) = p", p, subchromatic(minus_one_edge(fam)))
            _freeness(rep, c, family)
        elif name == "h":
            _family_clauses(rep, fam, p, matching(2), matching(2 * k - 2))
            c = construct_h_coloring(n, p, k)
            rep.add("colours = h(n,p,k-1)+1", ar_h(params), num_colors(c))
            _freeness(rep, c, family)
        elif name == "h-prime":
            _family_clauses(rep, fam, p, matching(2 * k))
            q = params.q
            if q is None:
                res = max_extra_colors(p, k, family, n)
                q = res.q
                rep.add("q stable at n and n+p", True, res.stable)
                labels = res.labels
            else:
                slots = h_prime_slots(n, p, k)
                if q > len(slots):
                    raise ValueError(f"q={q} exceeds the {len(slots)} colour slots")
                labels = [min(i, q - 1) for i in range(len(slots))]
            if labels is None:
                rep.add("q >= 1", True, False)
            else:
                c = construct_h_prime_coloring(n, p, k, labels)
                rep.add("colours = h'(n,p,k-1)+q", ar_h_prime(FormulaParams(n, p, k, q)), num_colors(c))
                _freeness(rep, c, family)
        elif name == "cliques":
            _family_clauses(rep, fam, p, matching(2 * k))
            formula = ar_disjoint_cliques(n, p, k)
            c = construct_h_coloring(n, p, k)
            rep.add("colours of rainbow H(n,p,k-1) + 1 = formula", formula, num_colors(c))
            rep.add("formula = h'(n,p,k-1) + q with q = C(k-2,2)+1",
                    formula, ar_h_prime(FormulaParams(n, p, k, comb(k - 2, 2) + 1)))
            _freeness(rep, c, family)
        elif name == "petersen":
            _family_clauses(rep, fam, 2, matching(6))
            c = petersen_coloring(n)
            rep.add("colours = formula", ar_petersen(n), num_colors(c))
            rep.add("formula = h'(n,2,2)+2", ar_petersen(n), ar_h_prime(FormulaParams(n, 2, 3, 2)))
            _freeness(rep, c, family)
        elif name == "gadget":
            _gadget_clauses(rep, fam, n, p, k)
        else:
            raise ValueError(f"unknown theorem {name!r}; choose from {', '.join(FORMULA_NAMES)}")
    except ResourceLimitError as exc:
        rep.error = str(exc)
    return rep


def _gadget_clauses(rep: Report, fam: GraphFamily, n: int, p: int, k: int):
    """Hypotheses come in two shapes: first decomposition {S_{k+1}} with
    every member containing Q(p, k), or first two decompositions {M_2},
    {S_{k+1}} with every stage-1 member containing Q(p, k)."""
    rep.add("p(F-) = p", p, subchromatic(minus_one_edge(fam)))
    seq = decomposition_sequence(fam, length=2)
    got = seq.decompositions
    star_fam = GraphFamily.of([star(k + 1)])
    edge_fam = GraphFamily.of([complete(2)])
    qg = q_graph(p, k)
    family = list(fam)
    if got and got[0] == edge_fam:
        rep.add("M0", edge_fam.to_graph6(), got[0].to_graph6())
        ok = len(got) > 1 and got[1] == star_fam
        rep.add("M1", star_fam.to_graph6(), got[1].to_graph6() if len(got) > 1 else [], ok)
        rep.add("k >= 3", True, k >= 3)
        stage1 = seq.stages[1].family if len(seq.stages) > 1 else GraphFamily()
        rep.add("every stage-1 member contains Q(p,k)", True,
                bool(len(stage1)) and all(contains_subgraph(qg, g) for g in stage1))
        second_shape = True
    else:
        rep.add("M0", star_fam.to_graph6(), got[0].to_graph6() if got else [], bool(got) and got[0] == star_fam)
        rep.add("every member contains Q(p,k)", True, all(contains_subgraph(qg, g) for g in fam))
        second_shape = False
    c = construct_gadget_extremal(n, p, k)
    rep.add("colours = formula", ar_gadget(n, p, k), num_colors(c))
    _freeness(rep, c, family)
    if second_shape and k == 3 and p == 2 and n % 4 == 2 and n >= 10:
        ex = construct_exceptional_k3(n)
        rep.add("exceptional colouring colours = formula", ar_gadget(n, p, k), num_colors(ex))
        _freeness(rep, ex, family, "exceptional colouring family-free")
