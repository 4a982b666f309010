import pytest

from antiramsey import graph as gr
from antiramsey.colorings import ColoringOfKn, is_family_free, num_colors
from antiramsey.constructions import construct_kp_extremal
from antiramsey.errors import ContractViolation
from antiramsey.oracle import (
    ar_cross_check, ar_exact, ar_lower_from_construction, copies_by_last_edge, monochromatic, rainbow_coloring,
)

from oracles import brute_rainbow, iso_classes, set_partitions

PATTERNS = [g for m in (3, 4) for g in iso_classes(m) if g.e >= 2]


def brute_ar(n, family):
    best = 0
    for rgs in set_partitions(list(range(n * (n - 1) // 2))):
        c = ColoringOfKn(n, rgs)
        if max(rgs) + 1 > best and not any(brute_rainbow(c, g) for g in family):
            best = max(rgs) + 1
    return best


def test_bell_number_of_six():
    assert sum(1 for _ in set_partitions(list(range(6)))) == 203


@pytest.mark.parametrize("pattern", PATTERNS, ids=lambda g: f"{g.n}v{g.e}e{g.edges}")
def test_oracle_matches_partition_enumeration(pattern):
    assert ar_exact(4, [pattern]).value == brute_ar(4, [pattern])


def test_oracle_on_pair_of_patterns():
    fam = [gr.path(4), gr.complete(3)]
    assert ar_exact(4, fam).value == brute_ar(4, fam)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_triangle(n):
    res = ar_exact(n, [gr.complete(3)])
    assert res.status == "exact" and res.value == n - 1 == res.upper
    assert is_family_free(res.witness, [gr.complete(3)])


def test_k4_on_five_vertices():
    res = ar_exact(5, [gr.complete(4)])
    assert res.value == 7
    assert num_colors(res.witness) == 7
    assert ar_lower_from_construction(construct_kp_extremal(5, 2), [gr.complete(4)]) == 7


def test_two_disjoint_edges_on_five_vertices():
    assert ar_exact(5, [gr.matching(4)]).value == 1


@pytest.mark.parametrize("pattern", [gr.complete(3), gr.path(4), gr.cycle(4), gr.star(4)])
@pytest.mark.parametrize("n", [4, 5])
def test_prunes_do_not_change_the_value(pattern, n):
    base = ar_exact(n, [pattern]).value
    assert ar_exact(n, [pattern], prune_rainbow=False).value == base
    assert ar_exact(n, [pattern], prune_bound=False).value == base


def test_deterministic():
    a = ar_exact(5, [gr.cycle(4)])
    b = ar_exact(5, [gr.cycle(4)])
    assert a.witness == b.witness and a.nodes == b.nodes


def test_budget_exhaustion_bounds():
    res = ar_exact(6, [gr.complete(4)], budget=50)
    assert res.status == "budget-exhausted" and res.value is None
    assert res.lower <= 11 <= res.upper
    assert is_family_free(res.witness, [gr.complete(4)])


def test_progress_callback():
    seen = []
    ar_exact(5, [gr.complete(3)], progress=lambda best, nodes: seen.append(best))
    assert seen and seen == sorted(seen) and seen[-1] == 4


@pytest.mark.parametrize("family", [[], [gr.complete(2)], [gr.complete(6)]])
def test_rejects_bad_families(family):
    with pytest.raises(ValueError):
        ar_exact(5, family)


def test_rejects_large_n():
    with pytest.raises(ValueError):
        ar_exact(9, [gr.complete(3)])


def test_copies_indexed_by_last_edge():
    groups = copies_by_last_edge(4, [gr.complete(3)])
    assert sum(map(len, groups)) == 4
    assert all(max(c) == i for i, g in enumerate(groups) for c in g)


def test_cross_check_relations():
    assert ar_cross_check(5, [gr.complete(3)], 4)["relation"] == "equal"
    assert ar_cross_check(5, [gr.complete(3)], 5)["relation"] == "oracle-below"


def test_lower_from_construction_checks_freeness():
    with pytest.raises(ContractViolation):
        ar_lower_from_construction(rainbow_coloring(4), [gr.complete(3)])
    assert ar_lower_from_construction(monochromatic(4), [gr.complete(3)]) == 1
