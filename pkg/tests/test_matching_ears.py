import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bidiears.connectivity import bidirected_strongly_connected
from bidiears.generators import random_matching_covered, random_matching_instance
from bidiears.graph_core import GraphError, Sign
from bidiears.matching_ears import (MatchingEarDecomposition, MatchingEarStep, OddEar, UEdge, UndirectedGraph,
                                    alternating_cycle_through, bidirect_from_matching, extending_matching,
                                    find_perfect_matching, is_elastic, is_matching_covered, is_perfect_matching,
                                    matching_decompose, verify_matching_decomposition)
from bidiears.oracles import all_perfect_matchings, naive_matching_covered
from helpers import cycle_graph, k4


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return UndirectedGraph.from_pairs(10, outer + spokes + inner)


def random_undirected(r, max_nodes=8):
    n = r.randint(1, max_nodes)
    m = r.randint(0, 2 * n)
    return UndirectedGraph(n, tuple(UEdge(j, *r.sample(range(n), 2)) for j in range(m)) if n > 1 else ())


# ---------------------------------------------------------------- matchings


def test_even_cycle_matchings():
    g = cycle_graph(6)
    assert len(all_perfect_matchings(g)) == 2
    assert is_perfect_matching(g, find_perfect_matching(g))
    assert is_matching_covered(g)


def test_odd_cycle_and_path():
    assert find_perfect_matching(cycle_graph(5)) is None
    path = UndirectedGraph.from_pairs(4, [(0, 1), (1, 2), (2, 3)])
    assert find_perfect_matching(path) is not None and not is_matching_covered(path)


def test_single_edge_and_k4_and_petersen_are_covered():
    assert is_matching_covered(UndirectedGraph.from_pairs(2, [(0, 1)]))
    assert is_matching_covered(k4())
    assert is_matching_covered(petersen())
    assert len(all_perfect_matchings(petersen())) == 6


def test_disconnected_is_not_covered():
    g = UndirectedGraph.from_pairs(4, [(0, 1), (2, 3)])
    assert find_perfect_matching(g) is not None and not is_matching_covered(g)


def test_is_perfect_matching_rejects():
    g = cycle_graph(4)
    assert not is_perfect_matching(g, {0})
    assert not is_perfect_matching(g, {0, 1})
    assert not is_perfect_matching(g, {0, 2, 99})


@settings(max_examples=150)
@given(st.integers(0, 10**6))
def test_matching_agrees_with_networkx(seed):
    g = random_undirected(random.Random(seed))
    nxg = nx.Graph()
    nxg.add_nodes_from(g.nodes)
    nxg.add_edges_from((e.u, e.v) for e in g.edges)
    best = nx.max_weight_matching(nxg, maxcardinality=True)
    has_pm = 2 * len(best) == len(g.nodes)
    pm = find_perfect_matching(g)
    assert (pm is not None) == has_pm
    if pm is not None:
        assert is_perfect_matching(g, pm)
    assert is_matching_covered(g) == naive_matching_covered(g)


# ---------------------------------------------------------------- the bidirected construction


def test_bidirect_from_matching_signs():
    g = cycle_graph(4)
    M = find_perfect_matching(g)
    b = bidirect_from_matching(g, M)
    for e in b.graph.edges:
        src = b.origin(e.id)
        if src in M and not b.is_auxiliary(e.id):
            assert (e.su, e.sv) == (Sign.IN, Sign.IN)
        else:
            assert (e.su, e.sv) == (Sign.OUT, Sign.OUT)
    # every node has exactly one entering end
    for x in g.nodes:
        assert sum(1 for e, s in b.graph.incident(x) if e.sign(s) is Sign.IN) == 1
    with pytest.raises(GraphError):
        bidirect_from_matching(g, {0})


@pytest.mark.parametrize("seed", range(25))
def test_covered_iff_bidirected_strong(seed):
    r = random.Random(seed)
    g = random_matching_covered(r, 8) if seed % 2 else random_undirected(r, 6)
    M = find_perfect_matching(g)
    if M is None or not g.is_connected() or not g.edges:
        return
    assert is_matching_covered(g) == bidirected_strongly_connected(bidirect_from_matching(g, M).graph)


def test_alternating_cycle():
    g = cycle_graph(6)
    M = find_perfect_matching(g)
    eid = next(e for e in g.edge_ids if e not in M)
    c = alternating_cycle_through(g, M, eid)
    assert c.nodes[0] == c.nodes[-1] and len(c.edges) == 6 and c.edges[0] == eid
    assert [e in M for e in c.edges] == [False, True] * 3
    with pytest.raises(GraphError):
        alternating_cycle_through(g, M, next(iter(M)))
    path = UndirectedGraph.from_pairs(4, [(0, 1), (1, 2), (2, 3)])
    assert alternating_cycle_through(path, {0, 2}, 1) is None


def test_elastic_and_extending_matching():
    g = k4()
    h = g.subgraph([0, 1], [next(e.id for e in g.edges if {e.u, e.v} == {0, 1})])
    assert is_elastic(g, h)
    M = extending_matching(g, h)
    assert is_perfect_matching(g, M) and h.edge_ids <= M
    bad = g.subgraph([0], [])
    assert not is_elastic(g, bad)


# ---------------------------------------------------------------- decompositions


def test_even_cycle_from_edge():
    g = cycle_graph(6)
    d = matching_decompose(g, g.subgraph([0, 1], [0]))
    assert [len(s.ears) for s in d.steps] == [1]
    assert len(d.steps[0].ears[0].edges) == 5
    assert verify_matching_decomposition(g, d)


def test_k4_from_c4_needs_a_double_step():
    g = k4()
    cyc = [e.id for e in g.edges if {e.u, e.v} in ({0, 1}, {1, 2}, {2, 3}, {0, 3})]
    h = g.subgraph(range(4), cyc)
    assert is_matching_covered(h) and is_elastic(g, h)
    d = matching_decompose(g, h)
    assert [s.kind for s in d.steps] == ["double"]
    assert verify_matching_decomposition(g, d)


def test_petersen_decomposes():
    g = petersen()
    d = matching_decompose(g, g.subgraph([0, 1], [0]))
    assert verify_matching_decomposition(g, d)
    assert all(len(e.edges) % 2 == 1 for s in d.steps for e in s.ears)


def test_preconditions():
    g = cycle_graph(6)
    with pytest.raises(GraphError):
        matching_decompose(g, g.subgraph([0, 1, 2], [0, 1]))
    path = UndirectedGraph.from_pairs(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(GraphError):
        matching_decompose(path, path.subgraph([0, 1], [0]))


def test_verify_rejects_tampering():
    g = cycle_graph(6)
    h = g.subgraph([0, 1], [0])
    d = matching_decompose(g, h)
    (ear,) = d.steps[0].ears
    assert verify_matching_decomposition(g, MatchingEarDecomposition(h, ())).code == "final"
    short = OddEar(ear.nodes[:3], ear.edges[:2])
    assert verify_matching_decomposition(g, MatchingEarDecomposition(h, (MatchingEarStep((short,)),))).code == "ear"
    assert verify_matching_decomposition(g, MatchingEarDecomposition(h, (MatchingEarStep((ear, ear)),))).code \
        == "pair-overlap"
    assert verify_matching_decomposition(g, MatchingEarDecomposition(g.subgraph([0], []), ())).code == "base"
    # an odd ear that leaves an odd number of nodes outside the host
    g2 = UndirectedGraph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    h2 = g2.subgraph([0, 1, 2, 3], [0, 1, 2, 3])
    v = verify_matching_decomposition(g2, MatchingEarDecomposition(h2, (MatchingEarStep((OddEar((0, 2), (4,)),)),)))
    assert v.code == "not-covered"


@pytest.mark.parametrize("seed", range(60))
def test_random_decompositions_verify(seed):
    inst = random_matching_instance(seed, max_nodes=10)
    d = matching_decompose(inst.g, inst.h)
    v = verify_matching_decomposition(inst.g, d)
    assert v, v.message
    assert all(len(e.edges) % 2 == 1 for s in d.steps for e in s.ears)
