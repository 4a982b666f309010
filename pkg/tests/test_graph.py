from math import comb

import pytest
from hypothesis import given, strategies as st

from antiramsey import graph as gr
from antiramsey.counts import h_count, h_prime_count, multipartite_count, simonovits_bound, turan_count
from antiramsey.graph6 import decode, encode, read_family_file, to_string, write_family_file

from strategies import graphs


def test_edges_are_normalized_and_deduplicated():
    g = gr.Graph(3, ((1, 0), (0, 1), (2, 1)))
    assert g.edges == ((0, 1), (1, 2))
    assert g.degrees == (1, 2, 1)


@pytest.mark.parametrize("edges", [((0, 0),), ((0, 3),), ((-1, 1),)])
def test_bad_edges_rejected(edges):
    with pytest.raises(ValueError):
        gr.Graph(3, edges)


def test_basic_constructors():
    assert gr.complete(5).e == 10
    assert gr.path(4).e == 3
    assert gr.cycle(5).degrees == (2,) * 5
    assert gr.star(4).max_degree == 3 and gr.star(4).n == 4
    m5 = gr.matching(5)
    assert (m5.n, m5.e) == (5, 2)
    assert gr.petersen().e == 15 and set(gr.petersen().degrees) == {3}


def test_turan_sizes_balanced():
    assert gr.turan_part_sizes(10, 3) == [4, 3, 3]
    assert gr.turan(7, 7).e == 21
    assert gr.turan(5, 1).e == 0


@given(st.integers(0, 30), st.integers(1, 6))
def test_turan_count_matches_graph(n, p):
    assert gr.turan(n, p).e == turan_count(n, p)


def test_fans_and_q_graph():
    assert (gr.fan(2).n, gr.fan(2).e) == (5, 6)
    g = gr.general_fan(2, 3)
    assert (g.n, g.e) == (7, 12)
    q = gr.q_graph(2, 3)
    assert q.n == 7 and q.e == 6 + 9


@given(st.integers(1, 12), st.integers(1, 4), st.integers(1, 4))
def test_h_counts_match_graphs(m, p, k):
    n = m + k - 1
    assert gr.h_graph(n, p, k).e == h_count(n, p, k)
    assert gr.h_prime_graph(n, p, k).e == h_prime_count(n, p, k)
    assert h_count(n, p, k) - h_prime_count(n, p, k) == comb(k - 1, 2)


def test_operations():
    g = gr.disjoint_union(gr.complete(3), gr.path(2))
    assert (g.n, g.e) == (5, 4)
    j = gr.join(gr.complete(1), gr.empty(3))
    assert j == gr.star(4)
    assert gr.complement(gr.complete(4)).e == 0
    assert gr.delete_edges(gr.complete(3), [(1, 0)]).edges == ((0, 2), (1, 2))
    assert gr.strip_isolated(gr.matching(5)).n == 4
    assert gr.connected_components(gr.copies(3, gr.complete(2))) == [[0, 1], [2, 3], [4, 5]]
    assert gr.is_triangle_free(gr.cycle(5)) and not gr.is_triangle_free(gr.complete(3))


def test_delete_missing_edge_fails():
    with pytest.raises(ValueError):
        gr.delete_edges(gr.path(3), [(0, 2)])


@given(graphs(max_n=9))
def test_complement_is_involution(g):
    assert gr.complement(gr.complement(g)) == g
    assert g.e + gr.complement(g).e == comb(g.n, 2)


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert decode(encode(g)) == g
    assert decode(to_string(g)) == g


def test_graph6_known_strings():
    assert to_string(gr.complete(5)) == "D~{"
    assert to_string(gr.Graph(0)) == "?"
    assert decode(">>graph6<<Bw") == gr.complete(3)
    assert to_string(gr.path(3)) == "Bg"


def test_graph6_large_n_round_trip():
    g = gr.cycle(70)
    assert decode(encode(g)) == g


def test_family_file(tmp_path):
    path = tmp_path / "f.g6"
    write_family_file(path, [gr.petersen(), gr.complete(3)])
    assert read_family_file(path) == [gr.petersen(), gr.complete(3)]


def test_multipartite_and_simonovits():
    assert multipartite_count([3, 3]) == 9 == turan_count(6, 2)
    assert simonovits_bound(6, 2, [3, 3]) == 9
    assert simonovits_bound(6, 2, [5, 1]) == 9 - 2 * comb(2, 2)
    with pytest.raises(ValueError):
        simonovits_bound(6, 2, [3, 2])


@given(st.integers(1, 4).flatmap(lambda p: st.lists(st.integers(0, 10), min_size=p, max_size=p)))
def test_simonovits_bounds_multipartite(sizes):
    n, p = sum(sizes), len(sizes)
    assert multipartite_count(sizes) <= simonovits_bound(n, p, sizes) <= turan_count(n, p)
