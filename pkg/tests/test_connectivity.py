import random

import networkx as nx
import pytest
from hypothesis import given

from bidiears.connectivity import (bidirected_strongly_connected, cycle_through, digraph_strongly_connected,
                                   edge_in_cycle, edges_in_cycles)
from bidiears.generators import random_bidirected
from bidiears.graph_core import BidirectedGraph, GraphError, is_edge_simple, validate_walk
from bidiears.oracles import naive_edge_in_cycle, naive_strongly_connected
from helpers import bidirected_graphs, directed_cycle, two_edge_pair_instance


def test_directed_cycle_is_strong():
    g = directed_cycle(4)
    assert digraph_strongly_connected(g) and bidirected_strongly_connected(g)


def test_directed_path_is_not_strong():
    g = BidirectedGraph.from_tuples(3, [(0, 1, "+", "-"), (1, 2, "+", "-")])
    assert not digraph_strongly_connected(g) and not bidirected_strongly_connected(g)


def test_single_node_is_strong():
    assert bidirected_strongly_connected(BidirectedGraph(1, ()))


def test_disconnected_is_not_strong():
    g = BidirectedGraph.from_tuples(4, [(0, 1, "+", "-"), (1, 0, "+", "-"), (2, 3, "+", "-"), (3, 2, "+", "-")])
    assert not bidirected_strongly_connected(g)


def test_leave_both_loop_alone_is_not_a_cycle():
    g = BidirectedGraph.from_tuples(1, [(0, 0, "+", "+")])
    assert not edge_in_cycle(g, 0)


def test_standard_loop_is_a_cycle():
    g = BidirectedGraph.from_tuples(1, [(0, 0, "+", "-")])
    assert edge_in_cycle(g, 0)


def test_two_opposite_loops_form_a_cycle():
    g = BidirectedGraph.from_tuples(2, [(0, 0, "+", "+"), (0, 1, "+", "-"), (1, 0, "+", "-"), (0, 0, "-", "-")])
    assert edges_in_cycles(g)


def test_digraph_check_rejects_nonstandard():
    with pytest.raises(GraphError):
        digraph_strongly_connected(BidirectedGraph.from_tuples(2, [(0, 1, "+", "+")]))


def test_adding_one_edge_can_break_strong_connectivity():
    G, H = two_edge_pair_instance()
    assert bidirected_strongly_connected(H)
    assert not bidirected_strongly_connected(G.subgraph(G.nodes, [0, 1, 2]))
    assert not bidirected_strongly_connected(G.subgraph(G.nodes, [0, 1, 3]))
    assert bidirected_strongly_connected(G)


def test_cycle_witness_is_valid():
    G, _ = two_edge_pair_instance()
    for e in G.edges:
        w = cycle_through(G, e.id)
        assert w is not None and w.cyclic and e.id in w.edge_ids
        assert validate_walk(G, w) and is_edge_simple(w)


def test_unknown_edge():
    with pytest.raises(GraphError):
        cycle_through(directed_cycle(3), 99)


@given(bidirected_graphs(max_nodes=4, max_edges=6))
def test_edge_in_cycle_matches_enumeration(g):
    for e in g.edges:
        w = cycle_through(g, e.id)
        assert (w is not None) == naive_edge_in_cycle(g, e.id)
        if w is not None:
            assert validate_walk(g, w) and is_edge_simple(w) and e.id in w.edge_ids


@given(bidirected_graphs(max_nodes=4, max_edges=6))
def test_strong_matches_enumeration(g):
    assert bidirected_strongly_connected(g) == naive_strongly_connected(g)


@pytest.mark.parametrize("seed", range(100))
def test_standard_graphs_agree_with_digraph_check(seed):
    r = random.Random(seed)
    n = r.randint(1, 6)
    g = random_bidirected(r, n, r.randint(0, 10), standard_only=True)
    d = nx.MultiDiGraph()
    d.add_nodes_from(range(n))
    d.add_edges_from((e.u, e.v) for e in g.edges)
    expected = nx.is_strongly_connected(d)
    assert digraph_strongly_connected(g) == expected
    assert bidirected_strongly_connected(g) == expected
