from itertools import combinations

from hypothesis import strategies as st

from antiramsey.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(chosen))


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))
