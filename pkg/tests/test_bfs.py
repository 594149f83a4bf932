import pytest
from hypothesis import given
from hypothesis import strategies as st

from ipgraph.bfs import BFS_REGISTERS, BfsError, bfs_all_components, bfs_run
from ipgraph.graph import EdgeList, build, generate
from ipgraph.oracle import oracle_bfs, oracle_bfs_all
from ipgraph.packing import DARK, LIGHT, ChoiceDictionary
from ipgraph.ram import run_budgeted, snapshot
from ipgraph.representations import to_begin_pointer
from conftest import HOUSE
from strategies import edge_lists


def test_house_from_1(house):
    assert bfs_run(house, 1) == [(1, 0), (2, 1), (5, 1), (3, 2), (4, 2)]
    assert house.words == HOUSE


def test_single_vertex():
    assert bfs_run(build(EdgeList(1, False, [])), 1) == [(1, 0)]


def test_directed_example(directed3):
    a = build(directed3)
    assert bfs_run(a, 1) == [(1, 0), (2, 1), (3, 1)]
    assert bfs_run(a, 2) == [(2, 0)]
    assert a.words == [3, 5, 7, 7, 2, 2, 3]


def test_all_components_two_edges():
    a = build(EdgeList(4, False, [(1, 2), (3, 4)]))
    assert bfs_all_components(a) == [(1, 0, 1), (2, 1, 1), (3, 0, 3), (4, 1, 3)]


def test_all_components_empty_graph():
    a = build(EdgeList(3, False, []))
    assert bfs_all_components(a) == [(1, 0, 1), (2, 0, 2), (3, 0, 3)]


def test_connected_graph_all_components_is_tagged_run(house):
    assert bfs_all_components(house) == [(v, d, 1) for v, d in bfs_run(house, 1)]


def test_sink_receives_records(house, house_edges):
    got = []
    assert bfs_run(house, 3, lambda v, d: got.append((v, d))) is None
    assert sorted(got) == sorted(oracle_bfs(house_edges, 3))


def test_input_checks(house):
    with pytest.raises(IndexError):
        bfs_run(house, 0)
    to_begin_pointer(house)
    with pytest.raises(BfsError):
        bfs_run(house, 1)


def test_rounds_are_ascending_within_and_monotone_across():
    e = generate("gnm", 300, 600, seed=4)
    out = bfs_run(build(e), 1)
    for (v1, d1), (v2, d2) in zip(out, out[1:]):
        assert d1 < d2 or (d1 == d2 and v1 < v2)


@given(edge_lists(max_n=40), st.data())
def test_matches_oracle_and_restores(e, data):
    a = build(e)
    d = snapshot(a)
    vs = data.draw(st.integers(1, e.n))
    got = bfs_run(a, vs)
    assert sorted(got) == sorted(oracle_bfs(e, vs))
    assert len({v for v, _ in got}) == len(got)
    assert snapshot(a) == d
    assert sorted(bfs_all_components(a)) == sorted(oracle_bfs_all(e))
    assert snapshot(a) == d


@pytest.mark.parametrize("model", ["gnm", "path", "star", "deg1-chains", "isolated-mix", "binary-tree"])
@pytest.mark.parametrize("directed", [False, True])
def test_packed_path_on_larger_graphs(model, directed):
    # n = 700 is above the packing threshold for 16-bit words
    e = generate(model, 700, 1500, seed=2, directed=directed)
    a = build(e)
    assert a.width == 16
    d = snapshot(a)
    assert sorted(bfs_run(a, 5)) == sorted(oracle_bfs(e, 5))
    assert sorted(bfs_all_components(a)) == sorted(oracle_bfs_all(e))
    assert snapshot(a) == d


def test_frontier_class_only_shrinks_within_a_round(monkeypatch):
    # record the frontier size whenever a frontier vertex is reported
    sizes = []
    real_choice = ChoiceDictionary.choice

    def spy(self, q):
        if q in (LIGHT, DARK):
            sizes.append((q, sum(self.color(v) == q for v in range(1, self.n + 1))))
        return real_choice(self, q)

    monkeypatch.setattr(ChoiceDictionary, "choice", spy)
    bfs_run(build(generate("binary-tree", 63)), 1)
    for (q1, s1), (q2, s2) in zip(sizes, sizes[1:]):
        if q1 == q2:
            assert s2 <= s1


def test_budget_is_constant_and_linear():
    peaks = set()
    for k in (8, 10, 12):
        n = 2 ** k
        a = build(generate("gnm", n, 4 * n, seed=k))
        _, stats = run_budgeted(64, lambda r: bfs_run(a, 1, lambda v, d: None, regs=r), a)
        peaks.add(stats.peak_registers)
        assert stats.accesses <= 40 * len(a)
    assert len(peaks) == 1 and peaks.pop() >= BFS_REGISTERS
