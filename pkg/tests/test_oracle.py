import pytest
from hypothesis import given

from ipgraph.graph import EdgeList, generate
from ipgraph.oracle import check_event_stream, oracle_bfs, oracle_bfs_all, oracle_dfs, oracle_packed_read
from strategies import graphs_with_start


def test_path_dfs():
    assert oracle_dfs(generate("path", 3), 1) == [("pre", 1), ("pre", 2), ("pre", 3),
                                                  ("post", 3), ("post", 2), ("post", 1)]


def test_house_dfs(house_edges):
    assert oracle_dfs(house_edges, 1) == [("pre", v) for v in range(1, 6)] + [("post", v) for v in range(5, 0, -1)]


def test_single_vertex():
    assert oracle_dfs(EdgeList(1), 1) == [("pre", 1), ("post", 1)]


def test_edge_events_on_a_path():
    assert oracle_dfs(generate("path", 2), 1, with_edge_events=True) == [
        ("pre", 1), ("preexp", 1, 2), ("pre", 2), ("preexp", 2, 1), ("postexp", 2, 1),
        ("post", 2), ("postexp", 1, 2), ("post", 1)]


def test_house_bfs(house_edges):
    assert dict(oracle_bfs(house_edges, 1)) == {1: 0, 2: 1, 5: 1, 3: 2, 4: 2}


def test_star_and_isolated():
    assert all(d == 1 for v, d in oracle_bfs(generate("star", 8), 1) if v != 1)
    e = EdgeList(3, False, [(1, 2)])
    assert 3 not in dict(oracle_bfs(e, 1))
    assert oracle_bfs_all(e) == [(1, 0, 1), (2, 1, 1), (3, 0, 3)]


def test_start_out_of_range():
    with pytest.raises(IndexError):
        oracle_dfs(EdgeList(2), 3)
    with pytest.raises(IndexError):
        oracle_bfs(EdgeList(2), 0)


def test_packed_read_oracle():
    assert oracle_packed_read([4, 5, 6], 2) == 5
    with pytest.raises(IndexError):
        oracle_packed_read([4], 2)


@given(graphs_with_start(max_n=25))
def test_dfs_stream_self_check_and_determinism(gs):
    e, start = gs
    ev = oracle_dfs(e, start)
    check_event_stream(ev)
    assert ev == oracle_dfs(e, start)


def test_check_event_stream_rejects_bad_nesting():
    with pytest.raises(AssertionError):
        check_event_stream([("pre", 1), ("pre", 2), ("post", 1), ("post", 2)])
    with pytest.raises(AssertionError):
        check_event_stream([("pre", 1)])
