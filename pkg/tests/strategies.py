"""Hypothesis strategies for simple graphs."""
from hypothesis import strategies as st

from ipgraph.graph import EdgeList


@st.composite
def edge_lists(draw, max_n=30, directed=None, min_n=1):
    n = draw(st.integers(min_n, max_n))
    d = draw(st.booleans()) if directed is None else directed
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v and (d or u < v)]
    if not pairs:
        return EdgeList(n, d, [])
    # density varies from empty to complete so degree-0/1 cases come up often
    p = draw(st.sampled_from([0.0, 0.05, 0.1, 0.2, 0.5, 1.0]))
    rnd = draw(st.randoms(use_true_random=False))
    edges = [e for e in pairs if rnd.random() < p]
    return EdgeList(n, d, edges)


@st.composite
def graphs_with_start(draw, max_n=30, directed=None):
    e = draw(edge_lists(max_n=max_n, directed=directed))
    start = draw(st.none() | st.integers(1, e.n))
    return e, start
