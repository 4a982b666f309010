import pytest
from hypothesis import given, strategies as st

from antiramsey import graph as gr
from antiramsey.canon import is_isomorphic
from antiramsey.expr import Atom, Copies, ExprError, Join, Union_, evaluate, parse, parse_graph, to_text


@pytest.mark.parametrize("text,graph", [
    ("K3", gr.complete(3)),
    ("2*K3", gr.copies(2, gr.complete(3))),
    ("K1 v T(6,2)", gr.q_graph(2, 3)),
    ("Q(2,3)", gr.q_graph(2, 3)),
    ("fan(2)", gr.fan(2)),
    ("fan(2,3)", gr.general_fan(2, 3)),
    ("petersen", gr.petersen()),
    ("K4 + 2*K3", gr.disjoint_union(gr.complete(4), gr.copies(2, gr.complete(3)))),
    ("M5", gr.matching(5)),
    ("S4", gr.star(4)),
    ("(P3 + K1) v C4", gr.join(gr.disjoint_union(gr.path(3), gr.complete(1)), gr.cycle(4))),
])
def test_parse_graphs(text, graph):
    assert is_isomorphic(parse_graph(text), graph)


def test_fan_sizes():
    assert parse_graph("fan(2,3)").n == 7
    assert parse_graph("fan(3)").n == 7


def test_precedence():
    assert parse("K1 v K2 + K3") == Union_((Join((Atom("K", (1,)), Atom("K", (2,)))), Atom("K", (3,))))
    assert parse("2*K1 v K2") == Join((Copies(2, Atom("K", (1,))), Atom("K", (2,))))


@pytest.mark.parametrize("text,pos", [("K", 1), ("K3 +", 4), ("T(3)", 3), ("K3 K4", 3), ("X", 0), ("2*", 2)])
def test_errors_carry_position(text, pos):
    with pytest.raises(ExprError) as info:
        parse(text)
    assert info.value.pos == pos
    assert f"position {pos}" in str(info.value)


def test_limits():
    with pytest.raises(ExprError):
        parse("K9999999")
    with pytest.raises(ExprError):
        parse_graph("1000*K100")
    with pytest.raises(ExprError):
        parse_graph("T(5,0)")


atoms = st.one_of(
    st.builds(lambda k, n: Atom(k, (n,)), st.sampled_from("KCPSM"), st.integers(1, 6)),
    st.builds(lambda n, p: Atom("T", (n, p)), st.integers(1, 6), st.integers(1, 3)),
    st.builds(lambda p, k: Atom("Q", (p, k)), st.integers(1, 2), st.integers(1, 2)),
    st.just(Atom("petersen", ())),
)
trees = st.recursive(atoms, lambda kids: st.one_of(
    st.builds(Copies, st.integers(1, 3), kids),
    st.builds(lambda xs: Join(tuple(xs)), st.lists(kids, min_size=2, max_size=3)),
    st.builds(lambda xs: Union_(tuple(xs)), st.lists(kids, min_size=2, max_size=3)),
), max_leaves=5)


@given(trees)
def test_printer_round_trip(tree):
    text = to_text(tree)
    again = parse(text)
    assert to_text(again) == text
    assert evaluate(again) == evaluate(tree)
