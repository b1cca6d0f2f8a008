"""Shared strategies and small fixed instances for the test suite."""
import random

from hypothesis import strategies as st

from bidiears.graph_core import BiEdge, BidirectedGraph, Sign, Step, Walk
from bidiears.matching_ears import UndirectedGraph

signs = st.sampled_from([Sign.OUT, Sign.IN])


@st.composite
def bidirected_graphs(draw, max_nodes=5, max_edges=8, min_edges=0, loops=True):
    n = draw(st.integers(1, max_nodes))
    m = draw(st.integers(min_edges, max_edges))
    edges = []
    for i in range(m):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 1))
        if not loops and u == v:
            continue
        edges.append(BiEdge(len(edges), u, draw(signs), v, draw(signs)))
    return BidirectedGraph(n, tuple(edges))


@st.composite
def graph_and_walk(draw, max_nodes=5, max_edges=8, max_len=8):
    """A graph plus a random walk that respects chaining (transit not enforced)."""
    g = draw(bidirected_graphs(max_nodes, max_edges, min_edges=1))
    x = draw(st.sampled_from(sorted(g.nodes)))
    start = x
    steps = []
    for _ in range(draw(st.integers(0, max_len))):
        opts = [(e.id, s) for e in g.edges for s in (0, 1) if e.node(s) == x]
        if not opts:
            break
        eid, slot = draw(st.sampled_from(opts))
        steps.append(Step(eid, slot))
        x = g.edge(eid).node(1 - slot)
    return g, Walk(start, tuple(steps))


def random_valid_walk(r: random.Random, g: BidirectedGraph, length: int, edge_simple: bool = True) -> Walk:
    """Random walk obeying transit; stops early when stuck."""
    x = r.choice(sorted(g.nodes))
    start, steps, used, arrive = x, [], set(), None
    for _ in range(length):
        opts = [(e.id, s) for e in g.edges for s in (0, 1)
                if e.node(s) == x and (arrive is None or e.sign(s) is not arrive)
                and not (edge_simple and e.id in used)]
        if not opts:
            break
        eid, slot = r.choice(opts)
        steps.append(Step(eid, slot))
        used.add(eid)
        x, arrive = g.edge(eid).end(1 - slot)
    return Walk(start, tuple(steps))


def directed_cycle(n: int) -> BidirectedGraph:
    return BidirectedGraph.from_tuples(n, [(i, (i + 1) % n, "+", "-") for i in range(n)])


def two_edge_pair_instance():
    """H is a directed 2-cycle; G adds a leave-both and an enter-both edge on the same two nodes.

    Either extra edge alone lies on no cycle, both together do.
    """
    G = BidirectedGraph.from_tuples(2, [(0, 1, "+", "-"), (1, 0, "+", "-"), (0, 1, "+", "+"), (0, 1, "-", "-")])
    H = G.subgraph([0, 1], [0, 1])
    return G, H


def four_node_chord_instance():
    """A 4-node version: directed 4-cycle plus a leave-both chord and an enter-both chord."""
    G = BidirectedGraph.from_tuples(4, [(0, 1, "+", "-"), (1, 2, "+", "-"), (2, 3, "+", "-"), (3, 0, "+", "-"),
                                        (0, 2, "+", "+"), (1, 3, "-", "-")])
    H = G.subgraph(range(4), [0, 1, 2, 3])
    return G, H


def cycle_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def k4() -> UndirectedGraph:
    return UndirectedGraph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
