"""Seeded random instances.  Every generator is a pure function of its arguments."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .connectivity import bidirected_strongly_connected, digraph_strongly_connected
from .graph_core import BiEdge, BidirectedGraph, Sign
from .matching_ears import UEdge, UndirectedGraph, is_elastic, is_matching_covered

SIGNS = (Sign.OUT, Sign.IN)


class GenerationError(RuntimeError):
    """Rejection sampling gave up."""


def _rng(seed: int | random.Random) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_bidirected(seed: int | random.Random, nodes: int, edges: int, *, loops: bool = True,
                      standard_only: bool = False) -> BidirectedGraph:
    """Uniform random ends and signs; parallel edges allowed."""
    r = _rng(seed)
    out = []
    for i in range(edges):
        u = r.randrange(nodes)
        v = r.randrange(nodes)
        while not loops and nodes > 1 and v == u:
            v = r.randrange(nodes)
        if standard_only:
            out.append(BiEdge(i, u, Sign.OUT, v, Sign.IN))
        else:
            out.append(BiEdge(i, u, r.choice(SIGNS), v, r.choice(SIGNS)))
    return BidirectedGraph(nodes, tuple(out))


def random_strong_bidirected(seed: int | random.Random, nodes: int, edges: int, *,
                             standard_only: bool = False, tries: int = 10_000) -> BidirectedGraph:
    """Rejection sampling until the graph is strongly connected."""
    r = _rng(seed)
    for _ in range(tries):
        g = random_bidirected(r, nodes, edges, loops=False, standard_only=standard_only)
        if bidirected_strongly_connected(g):
            return g
    raise GenerationError(f"no strongly connected graph with {nodes} nodes and {edges} edges after {tries} tries")


def random_strong_digraph(seed: int | random.Random, nodes: int, arcs: int) -> BidirectedGraph:
    """A directed cycle through a random node order plus random extra arcs (all standard)."""
    r = _rng(seed)
    order = list(range(nodes))
    r.shuffle(order)
    pairs = list(zip(order, order[1:] + order[:1])) if nodes > 1 else []
    while len(pairs) < arcs and nodes > 1:
        pairs.append(tuple(r.sample(range(nodes), 2)))
    r.shuffle(pairs)
    return BidirectedGraph(nodes, tuple(BiEdge(i, u, Sign.OUT, v, Sign.IN) for i, (u, v) in enumerate(pairs)))


def _threads(g: BidirectedGraph, H_nodes: set[int], H_edges: set[int]) -> list[tuple[set[int], set[int]]]:
    """Deletable ears: single edges, plus paths through nodes of degree two (node and edge sets)."""
    deg: dict[int, list[int]] = {x: [] for x in H_nodes}
    for e in g.edges:
        if e.id in H_edges:
            deg[e.u].append(e.id)
            if e.v != e.u:
                deg[e.v].append(e.id)
    out = [(set(), {eid}) for eid in sorted(H_edges)]
    for x in sorted(H_nodes):
        if len(deg[x]) != 2:
            continue
        nodes, edges = {x}, set(deg[x])
        frontier = list(edges)
        while frontier:
            e = g.edge(frontier.pop())
            for y in (e.u, e.v):
                if y not in nodes and len(deg[y]) == 2:
                    nodes.add(y)
                    for f in deg[y]:
                        if f not in edges:
                            edges.add(f)
                            frontier.append(f)
        if len(nodes) < len(H_nodes):
            out.append((nodes, edges))
    return out


def ear_deleted_subgraph(seed: int | random.Random, g: BidirectedGraph, deletions: int) -> BidirectedGraph:
    """Delete up to ``deletions`` random ears (single edges, degree-two threads, or pairs of edges) keeping strong connectivity."""
    r = _rng(seed)
    nodes, edges = set(g.nodes), set(g.edge_ids)
    for _ in range(deletions):
        cands = _threads(g, nodes, edges)
        if len(edges) >= 2:
            ids = sorted(edges)
            a, b = r.sample(ids, 2)
            cands.append((set(), {a, b}))
        r.shuffle(cands)
        for dn, de in cands:
            nn, ne = nodes - dn, edges - de
            if not nn:
                continue
            h = g.subgraph(nn, ne)
            if bidirected_strongly_connected(h):
                nodes, edges = nn, ne
                break
    return g.subgraph(nodes, edges)


@dataclass(frozen=True)
class EarInstance:
    G: BidirectedGraph
    H: BidirectedGraph


def random_ear_instance(seed: int, *, max_nodes: int = 8, max_edges: int = 18,
                        standard_only: bool = False) -> EarInstance:
    r = random.Random(seed)
    n = r.randint(2, max_nodes)
    m = r.randint(min(max_edges, 3 * n // 2 + 1), min(max_edges, 2 * n + 2))
    if standard_only:
        G = random_strong_digraph(r, n, m)
    else:
        G = random_strong_bidirected(r, n, m)
    H = ear_deleted_subgraph(r, G, r.randint(1, m))
    return EarInstance(G, H)


@dataclass(frozen=True)
class TwoEdgeInstance:
    D: BidirectedGraph
    E: tuple[BiEdge, ...]


def random_two_edge_instance(seed: int, *, max_nodes: int = 8, max_arcs: int = 12, max_extra: int = 6,
                             tries: int = 10_000) -> TwoEdgeInstance:
    r = random.Random(seed)
    n = r.randint(2, max_nodes)
    D = random_strong_digraph(r, n, r.randint(n, max(n, min(max_arcs, 2 * n))))
    assert digraph_strongly_connected(D)
    for _ in range(tries):
        k = r.randint(2, max_extra)
        E = []
        for i in range(k):
            sg = r.choice(SIGNS)
            E.append(BiEdge(len(D.edges) + i, r.randrange(n), sg, r.randrange(n), sg))
        if bidirected_strongly_connected(D.with_edges(E)):
            return TwoEdgeInstance(D, tuple(E))
    raise GenerationError("no admissible nonstandard edge set found")


# ---------------------------------------------------------------- matching covered graphs


@dataclass(frozen=True)
class MatchingInstance:
    g: UndirectedGraph
    h: UndirectedGraph


def random_matching_covered(seed: int | random.Random, max_nodes: int = 12, tries: int = 1000) -> UndirectedGraph:
    """Grow odd ears onto a single edge or an even cycle; accept once the result is matching covered."""
    r = _rng(seed)
    for _ in range(tries):
        target = r.randrange(2, max_nodes + 1, 2)
        if r.random() < 0.5 or target < 4:
            n, pairs = 2, [(0, 1)]
        else:
            n = r.randrange(4, target + 1, 2)
            pairs = [(i, (i + 1) % n) for i in range(n)]
        extra_edges = r.randint(0, 4)
        while n < target or extra_edges > 0:
            u, v = r.sample(range(n), 2)
            length = r.choice([1, 1, 3, 3, 5])
            if n + length - 1 > target:
                length = 1
            if length == 1:
                extra_edges -= 1
            path = [u] + list(range(n, n + length - 1)) + [v]
            n += length - 1
            pairs.extend(zip(path, path[1:]))
        g = UndirectedGraph(n, tuple(UEdge(i, a, b) for i, (a, b) in enumerate(pairs)))
        if is_matching_covered(g):
            return g
    raise GenerationError("no matching covered graph found")


def random_matching_instance(seed: int, max_nodes: int = 12) -> MatchingInstance:
    """A matching covered graph and a random elastic matching covered subgraph of it."""
    r = random.Random(seed)
    g = random_matching_covered(r, max_nodes)
    cands = [g.subgraph((e.u, e.v), (e.id,)) for e in g.edges]
    nodes = sorted(g.nodes)
    for _ in range(8):
        k = r.randrange(2, len(nodes) + 1, 2)
        sub = g.induced(r.sample(nodes, k))
        drop = {e.id for e in sub.edges if r.random() < 0.3}
        cands.append(sub)
        cands.append(g.subgraph(sub.nodes, sub.edge_ids - drop))
    r.shuffle(cands)
    for h in cands:
        if is_matching_covered(h) and is_elastic(g, h):
            return MatchingInstance(g, h)
    return MatchingInstance(g, g)
