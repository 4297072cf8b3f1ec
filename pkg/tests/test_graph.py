import io
from itertools import combinations
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigidnet import (
    Graph,
    IndexOutOfRangeError,
    LoopEdgeError,
    ParseError,
    UnknownEdgeError,
    dump_edge_list,
    graph_from_edge_list,
    is_k_connected,
    load_edge_list,
    remove_edges,
)

from bruteforce import (
    brute_k_connected,
    complete_graph,
    random_graph,
    shared_vertex_triangles,
    wheel_graph,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return graph_from_edge_list(n, [])
    edges = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs), unique=True))
    return graph_from_edge_list(n, edges)


def test_triangle_construction():
    g = graph_from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert g.n == 3
    assert g.edges == frozenset({(0, 1), (1, 2), (0, 2)})


def test_duplicates_collapse():
    g = graph_from_edge_list(4, [(0, 1), (1, 0)])
    assert g.m == 1
    assert g.edges == frozenset({(0, 1)})


def test_endpoint_out_of_range():
    with pytest.raises(IndexOutOfRangeError):
        graph_from_edge_list(2, [(0, 2)])
    with pytest.raises(IndexOutOfRangeError):
        graph_from_edge_list(3, [(-1, 1)])


def test_loop_rejected():
    with pytest.raises(LoopEdgeError):
        graph_from_edge_list(3, [(1, 1)])


def test_negative_vertex_count_rejected():
    with pytest.raises(ValueError):
        Graph(-1, frozenset())


def test_edges_canonicalized_on_direct_construction():
    g = Graph(3, frozenset({(2, 0)}))
    assert g.edges == frozenset({(0, 2)})


def test_remove_edges_path():
    k3 = complete_graph(3)
    g = remove_edges(k3, {(0, 1)})
    assert g.n == 3
    assert g.edges == frozenset({(0, 2), (1, 2)})


def test_remove_edges_empty_set_identity():
    k4 = complete_graph(4)
    assert remove_edges(k4, set()) == k4


def test_remove_all_edges():
    k4 = complete_graph(4)
    g = remove_edges(k4, k4.edges)
    assert g.n == 4 and g.m == 0


def test_remove_unknown_edge():
    with pytest.raises(UnknownEdgeError):
        remove_edges(complete_graph(3), {(0, 3)})


@given(graphs())
def test_remove_then_readd_roundtrip(g):
    if g.m == 0:
        return
    subset = sorted(g.edges)[: (g.m + 1) // 2]
    smaller = remove_edges(g, subset)
    restored = graph_from_edge_list(
        g.n, list(smaller.edges) + list(subset)
    )
    assert restored.edges == g.edges


@given(graphs())
def test_edge_count_bound(g):
    assert g.m <= g.n * (g.n - 1) // 2


def test_k4_is_3_connected():
    assert is_k_connected(complete_graph(4), 3)
    assert not is_k_connected(complete_graph(4), 4)


def test_shared_vertex_triangles_not_2_connected():
    assert not is_k_connected(shared_vertex_triangles(), 2)
    assert is_k_connected(shared_vertex_triangles(), 1)


def test_wheel_w5_is_3_connected():
    w5 = wheel_graph(6)
    assert brute_k_connected(w5, 3)  # oracle first
    assert is_k_connected(w5, 3)


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        is_k_connected(complete_graph(3), 0)


def test_connectivity_matches_bruteforce():
    rng = Random(20240817)
    for _ in range(120):
        n = rng.randint(1, 8)
        g = random_graph(rng, n, rng.randint(0, n * (n - 1) // 2))
        for k in (1, 2, 3):
            assert is_k_connected(g, k) == brute_k_connected(g, k), (g, k)


# --- edge-list format ---------------------------------------------------------


def test_edge_list_roundtrip_basic():
    g = complete_graph(4)
    buf = io.StringIO()
    dump_edge_list(g, buf)
    assert load_edge_list(io.StringIO(buf.getvalue())) == g


@given(graphs())
@settings(max_examples=60)
def test_edge_list_roundtrip(g):
    buf = io.StringIO()
    dump_edge_list(g, buf)
    assert load_edge_list(io.StringIO(buf.getvalue())) == g


def test_edge_list_comments_and_blanks():
    text = "# comment\n\n3 2\n# another\n0 1\n\n1 2\n"
    g = load_edge_list(io.StringIO(text))
    assert g.n == 3 and g.edges == frozenset({(0, 1), (1, 2)})


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("", 1),
        ("nonsense\n", 1),
        ("3\n", 1),
        ("3 2\n0 1\n", 1),  # missing edge line: reported at header
        ("3 1\n0 1\n1 2\n", 3),  # extra line
        ("3 2\n0 x\n1 2\n", 2),  # malformed token
        ("3 2\n0 1\n1 1\n", 3),  # loop
        ("3 2\n0 1\n1 3\n", 3),  # endpoint out of range
    ],
)
def test_edge_list_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ParseError) as err:
        load_edge_list(io.StringIO(text))
    assert err.value.lineno == lineno
    assert f"line {lineno}" in str(err.value)


def test_edge_list_from_path(tmp_path):
    p = tmp_path / "g.edgelist"
    dump_edge_list(complete_graph(5), p)
    assert load_edge_list(p) == complete_graph(5)
