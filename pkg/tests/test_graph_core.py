import itertools

import pytest
from hypothesis import given, strategies as st

from pathseq.graph_core import (Graph, GraphError, ParseError, UnsupportedSizeError,
                                are_isomorphic_small, is_connected, parse_edge_list, parse_graph6,
                                write_edge_list, write_graph6)

K4 = Graph.from_edges(4, [(i, j) for j in range(4) for i in range(j)])
CLAW = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
TRIANGLE_PLUS = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2)])


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


def test_graph6_examples():
    assert parse_graph6("C~") == K4
    assert parse_graph6("Cs") == CLAW
    assert parse_graph6("@") == Graph.empty(1)
    assert write_graph6(K4) == "C~"
    assert write_graph6(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])) == "Ch"
    assert write_graph6(Graph.empty(1)) == "@"
    assert write_graph6(TRIANGLE_PLUS) == "Cw"


def test_graph6_header_is_accepted():
    assert parse_graph6(">>graph6<<Cs\n") == CLAW


@given(graphs(max_n=20))
def test_graph6_round_trip(g):
    assert parse_graph6(write_graph6(g)) == g


@pytest.mark.parametrize("text, offset", [
    ("C~x", 2),        # trailing character
    ("D~", 2),         # needs two bit characters
    ("C\x7f", 1),      # above 126
    ("C ", 1),         # below 63
    ("~??", 0),        # long-form header
    ("Bt", 1),         # nonzero padding
    (">>graph6<<", 10),
])
def test_graph6_errors_name_offset(text, offset):
    with pytest.raises(ParseError) as info:
        parse_graph6(text)
    assert info.value.offset == offset
    assert f"byte {offset}" in str(info.value)


def test_graph6_writer_size_guard():
    with pytest.raises(UnsupportedSizeError):
        write_graph6(Graph.empty(63))


def test_edge_list_examples():
    assert parse_edge_list("3\n0 1\n1 2\n2 0") == Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert parse_edge_list("4\n0 1\n0 2\n0 3") == CLAW
    assert parse_edge_list("# claw\n4\n0 1\n0 2 # spoke\n0 3\n0 1\n") == CLAW


@pytest.mark.parametrize("text, line, fragment", [
    ("2\n0 0", 2, "self-loop"),
    ("3\n0 1\n1 3", 3, "out of range"),
    ("3\n0 1\n2", 3, "odd number"),
    ("3\n0 x", 2, "integer"),
    ("", 1, "empty"),
])
def test_edge_list_errors(text, line, fragment):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert fragment in str(info.value)


@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(write_edge_list(g)) == g


def test_invariants_enforced():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(1, (0b1,))
    with pytest.raises(GraphError):
        Graph(2, (0b100, 0))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_connectivity():
    assert is_connected(CLAW)
    assert not is_connected(TRIANGLE_PLUS)
    assert is_connected(Graph.empty(0))
    assert is_connected(Graph.empty(1))
    assert not is_connected(Graph.empty(2))


def test_isomorphism_examples():
    star3 = Graph.from_edges(4, [(3, 0), (3, 1), (3, 2)])
    assert are_isomorphic_small(CLAW, star3)
    assert not are_isomorphic_small(CLAW, TRIANGLE_PLUS)
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert not are_isomorphic_small(c4, p4)
    assert not are_isomorphic_small(CLAW, Graph.empty(5))
    with pytest.raises(UnsupportedSizeError):
        are_isomorphic_small(Graph.empty(11), Graph.empty(11))


def test_isomorphism_is_an_equivalence_on_four_vertices():
    pairs = [(i, j) for j in range(4) for i in range(j)]
    labeled = [Graph.from_edges(4, [p for k, p in enumerate(pairs) if mask >> k & 1])
               for mask in range(64)]
    rel = [[are_isomorphic_small(a, b) for b in labeled] for a in labeled]
    for i in range(64):
        assert rel[i][i]
        for j in range(64):
            assert rel[i][j] == rel[j][i]
    for i, j, k in itertools.product(range(64), repeat=3):
        if rel[i][j] and rel[j][k]:
            assert rel[i][k]
    # 11 unlabeled graphs on four vertices
    classes = {min(j for j in range(64) if rel[i][j]) for i in range(64)}
    assert len(classes) == 11


@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_relabeled_graphs_are_isomorphic(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert are_isomorphic_small(g, g.relabel(perm))


def test_disjoint_union():
    g = K4.disjoint_union(CLAW)
    assert g.n == 8 and g.edge_count == 9
    assert g.neighbors(4) == [5, 6, 7]
