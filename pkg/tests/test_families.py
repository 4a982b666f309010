import pytest
from hypothesis import given, settings, strategies as st

from antiramsey import graph as gr
from antiramsey.errors import ResourceLimitError
from antiramsey.families import (
    GraphFamily, all_graphs, decomposition_family, decomposition_remainder, decomposition_sequence,
    embeds_with_padding, k5_determination_check, minimal_elements, minus_one_edge, split_candidates, subchromatic,
)
from antiramsey.subgraph import contains_subgraph

from strategies import graphs


def fam(*gs):
    return GraphFamily.of(gs)


def padded_host(m: gr.Graph, p: int, t: int) -> gr.Graph:
    """(m + t isolated vertices) joined with T(t, p-1), built explicitly."""
    side = gr.disjoint_union(m, gr.empty(t))
    return gr.join(side, gr.turan(t, p - 1)) if p > 1 else side


def test_family_dedups_and_orders():
    f = fam(gr.complete(3), gr.cycle(3), gr.path(2))
    assert len(f) == 2
    assert f.members[0].n == 2
    assert gr.relabel(gr.path(4), [3, 1, 0, 2]) in fam(gr.path(4))
    assert fam(gr.path(3), gr.complete(3)) == fam(gr.complete(3), gr.path(3))


def test_subchromatic_and_minus_one_edge():
    assert subchromatic(fam(gr.complete(5))) == 4
    assert minus_one_edge(fam(gr.complete(4))) == fam(gr.delete_edges(gr.complete(4), [(0, 1)]))
    assert subchromatic(minus_one_edge(fam(gr.petersen()))) == 2
    with pytest.raises(ValueError):
        subchromatic(GraphFamily())


def test_embeds_with_padding_examples():
    assert embeds_with_padding(gr.complete(4), gr.complete(2), 3, 4)
    assert not embeds_with_padding(gr.complete(4), gr.Graph(1), 3, 4)
    assert embeds_with_padding(gr.copies(2, gr.complete(3)), gr.matching(4), 2, 6)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=5), graphs(max_n=3), st.integers(1, 3), st.integers(0, 4))
def test_embeds_with_padding_matches_materialized_host(l, m, p, t):
    assert embeds_with_padding(l, m, p, t) == contains_subgraph(l, padded_host(m, p, t))


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=5), graphs(max_n=3), st.integers(1, 3), st.integers(0, 4))
def test_padding_is_monotone_in_t(l, m, p, t):
    if embeds_with_padding(l, m, p, t):
        assert embeds_with_padding(l, m, p, t + 1)


@pytest.mark.parametrize("family,want", [
    ((gr.complete(4), gr.copies(2, gr.complete(3))), (gr.complete(3), gr.matching(4))),
    ((gr.fan(2),), (gr.star(3), gr.matching(4))),
    ((gr.fan(3),), (gr.star(4), gr.matching(6))),
    ((gr.general_fan(2, 3),), (gr.star(3), gr.matching(4))),
    ((gr.petersen(),), (gr.matching(6),)),
    ((gr.copies(3, gr.complete(3)),), (gr.matching(6),)),
    ((gr.complete(5),), (gr.complete(2),)),
])
def test_decomposition_examples(family, want):
    assert decomposition_family(GraphFamily.of(family)) == GraphFamily.of(want)


def check_decomposition(f: GraphFamily):
    """Every member is sound (forces a member in a large padded host) and
    minimal (no proper subgraph obtained by dropping an edge does)."""
    p = subchromatic(f)
    dec = decomposition_family(f)
    t = max(g.n for g in f) * max(p - 1, 1)
    for m in dec:
        assert any(contains_subgraph(g, padded_host(m, p, t)) for g in f)
        for e in m.edges:
            smaller = gr.delete_edges(m, [e])
            assert not any(contains_subgraph(g, padded_host(smaller, p, t)) for g in f)
    for a in dec:
        for b in dec:
            assert a is b or not contains_subgraph(a, b)
    return dec


@pytest.mark.parametrize("family", [
    (gr.complete(4),), (gr.fan(2),), (gr.cycle(5),), (gr.q_graph(2, 2),),
    (gr.complete(4), gr.copies(2, gr.complete(3))),
])
def test_decomposition_sound_and_minimal(family):
    check_decomposition(GraphFamily.of(family))


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=6).filter(lambda g: g.e > 0))
def test_decomposition_sound_and_minimal_random(g):
    check_decomposition(fam(g))


def test_split_candidates_minimal_sets():
    # with p = 1 the only admissible S is the whole vertex set
    assert split_candidates(gr.cycle(5), 1) == [gr.cycle(5)]


def test_minimal_elements():
    assert minimal_elements([gr.path(3), gr.complete(3), gr.path(2)]) == fam(gr.path(2))


def test_remainder_of_k4_by_edge():
    assert decomposition_remainder(fam(gr.complete(4)), fam(gr.complete(2))) == all_graphs(4, 5)


def test_remainder_empty_when_nothing_embeds(caplog):
    assert len(decomposition_remainder(fam(gr.path(3)), fam(gr.complete(3)))) == 0


@pytest.mark.parametrize("n,counts", [(4, [1, 1, 2, 3, 2, 1, 1]), (5, [1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1])])
def test_all_graphs_counts(n, counts):
    assert [len(all_graphs(n, e)) for e in range(len(counts))] == counts


def test_all_graphs_total_on_seven_vertices():
    assert sum(len(all_graphs(7, e)) for e in range(22)) == 1044


def test_all_graphs_limit():
    with pytest.raises(ResourceLimitError):
        all_graphs(8, 3)


def test_k5_sequence_stages():
    seq = decomposition_sequence(fam(gr.complete(5)))
    assert len(seq.stages) == 4 and seq.status == "edgeless"
    assert [s.p for s in seq.stages] == [4, 3, 2, 1]
    assert seq.decompositions[0] == seq.decompositions[1] == fam(gr.complete(2))
    assert seq.families[1] == all_graphs(5, 9)
    assert seq.families[2] == all_graphs(5, 8)
    assert seq.decompositions[3] == all_graphs(5, 6).stripped()


def test_k5_second_decomposition_is_a_path():
    # the stage-2 family is G(5,8) with p = 2; its minimal split pieces are P3 and K3
    seq = decomposition_sequence(fam(gr.complete(5)))
    assert seq.decompositions[2] == fam(gr.path(3))


@pytest.mark.parametrize("t", [5, 6, 7, 8])
def test_m4_does_not_force_g58_in_materialized_host(t):
    g58 = all_graphs(5, 8)
    assert not any(contains_subgraph(g, padded_host(gr.matching(4), 2, t)) for g in g58)
    assert any(contains_subgraph(g, padded_host(gr.path(3), 2, t)) for g in g58)


def test_frozen_p_degenerates():
    seq = decomposition_sequence(fam(gr.complete(5)), reevaluate_p=False)
    assert seq.decompositions[0] == fam(gr.complete(2))
    assert seq.decompositions[1].is_edgeless()


def test_k5_report_fails_only_on_second_decomposition():
    rep = k5_determination_check()
    failing = [line.name for line in rep.lines if not line.passed]
    assert failing == ["M2"]
    assert "overall: FAIL" in rep.table()
