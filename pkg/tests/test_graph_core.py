import pytest
from hypothesis import given

from bidiears.graph_core import (BiEdge, BidirectedGraph, GraphError, Sign, Step, Walk, concat_walks,
                                 is_edge_simple, is_node_simple, underlying_connected, validate_walk)
from helpers import graph_and_walk


def path3():
    return BidirectedGraph.from_tuples(3, [(0, 1, "+", "-"), (1, 2, "+", "-")])


def test_directed_path_is_valid_walk():
    g = path3()
    assert validate_walk(g, Walk(0, (Step(0, 0), Step(1, 0))))


def test_two_entering_ends_break_transit():
    g = BidirectedGraph.from_tuples(3, [(0, 1, "+", "-"), (2, 1, "+", "-")])
    v = validate_walk(g, Walk(0, (Step(0, 0), Step(1, 1))))
    assert not v and v.code == "transit" and v.index == 1


def test_entering_loop_is_not_a_cyclic_walk():
    g = BidirectedGraph.from_tuples(1, [(0, 0, "-", "-")])
    v = validate_walk(g, Walk(0, (Step(0, 0),), cyclic=True))
    assert not v and v.code == "transit"


def test_standard_loop_is_a_cyclic_walk():
    g = BidirectedGraph.from_tuples(1, [(0, 0, "+", "-")])
    assert validate_walk(g, Walk(0, (Step(0, 0),), cyclic=True))


def test_unknown_edge_is_structural_error():
    with pytest.raises(GraphError):
        validate_walk(path3(), Walk(0, (Step(7, 0),)))


def test_chain_break_reported_separately():
    v = validate_walk(path3(), Walk(0, (Step(1, 0),)))
    assert v.code == "chain" and v.index == 0


def test_empty_walk_is_valid_and_not_cyclic():
    w = Walk(2)
    assert validate_walk(path3(), w) and not w.cyclic and w.end(path3()) == 2


def test_edge_reuse_is_not_edge_simple():
    g = BidirectedGraph.from_tuples(2, [(0, 1, "+", "-"), (1, 0, "+", "-")])
    w = Walk(0, (Step(0, 0), Step(1, 0), Step(0, 0)))
    assert validate_walk(g, w) and not is_edge_simple(w)


def test_directed_cycle_is_node_simple():
    g = BidirectedGraph.from_tuples(3, [(0, 1, "+", "-"), (1, 2, "+", "-"), (2, 0, "+", "-")])
    w = Walk(0, (Step(0, 0), Step(1, 0), Step(2, 0)), cyclic=True)
    assert validate_walk(g, w) and is_node_simple(g, w)


def test_figure_eight_is_edge_simple_but_not_node_simple():
    # two directed triangles sharing node 0, traversed as one 6-edge walk; a 5-edge prefix already repeats 0 inside
    g = BidirectedGraph.from_tuples(5, [(0, 1, "+", "-"), (1, 2, "+", "-"), (2, 0, "+", "-"),
                                        (0, 3, "+", "-"), (3, 4, "+", "-"), (4, 0, "+", "-")])
    w = Walk(0, tuple(Step(i, 0) for i in range(5)))
    assert validate_walk(g, w)
    assert w.nodes(g) == [0, 1, 2, 0, 3, 4]
    assert is_edge_simple(w) and not is_node_simple(g, w)


def test_underlying_connectivity_examples():
    assert underlying_connected(BidirectedGraph.from_tuples(2, [(0, 1, "+", "+")]))
    assert not underlying_connected(BidirectedGraph(2, ()))
    assert not underlying_connected(BidirectedGraph.from_tuples(4, [(0, 1, "+", "-"), (2, 3, "-", "-")]))
    assert underlying_connected(BidirectedGraph(1, ()))
    assert underlying_connected(BidirectedGraph(0, ()))


def test_loop_has_two_slots():
    e = BiEdge(0, 3, Sign.OUT, 3, Sign.IN)
    assert e.is_loop and e.end(0) == (3, Sign.OUT) and e.end(1) == (3, Sign.IN)


def test_bad_edge_reference_rejected():
    with pytest.raises(GraphError):
        BidirectedGraph.from_tuples(2, [(0, 5, "+", "-")])


@given(graph_and_walk())
def test_reversal_preserves_validity(gw):
    g, w = gw
    assert bool(validate_walk(g, w)) == bool(validate_walk(g, w.reversed(g)))
    assert w.reversed(g).reversed(g) == w


@given(graph_and_walk())
def test_concatenation_needs_a_transit_pair_at_the_junction(gw):
    g, w1 = gw
    k = len(w1.steps) // 2
    a = Walk(w1.start, w1.steps[:k])
    b = Walk(a.end(g), w1.steps[k:])
    if not (validate_walk(g, a) and validate_walk(g, b)):
        return
    joined = concat_walks(g, a, b)
    assert joined == Walk(w1.start, w1.steps)
    if a.steps and b.steps:
        arrive = g.edge(a.steps[-1].edge).sign(a.steps[-1].to_slot)
        depart = g.edge(b.steps[0].edge).sign(b.steps[0].from_slot)
        assert bool(validate_walk(g, joined)) == (arrive is not depart)


@given(graph_and_walk())
def test_reported_index_is_minimal(gw):
    g, w = gw
    v = validate_walk(g, w)
    if v or w.cyclic:
        return
    # every proper prefix ending before the reported index is valid
    assert validate_walk(g, Walk(w.start, w.steps[:v.index]))
