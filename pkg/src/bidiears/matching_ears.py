"""Odd-ear decompositions of matching covered graphs, obtained through bidirected graphs.

Given a perfect matching M, every unmatched edge becomes a bidirected edge
leaving both ends and every matched edge ``i`` becomes two parallel edges, one
entering both ends and one leaving both ends (the auxiliary copy).  Bidirected
edge ids encode the origin: ``2i`` is the unmatched edge or the entering copy,
``2i + 1`` the auxiliary copy.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .ear_decomp import try_double_ear, try_single_ear
from .graph_core import BiEdge, BidirectedGraph, GraphError, Sign, Verdict, Walk
from .two_edges import InvariantFailure


@dataclass(frozen=True)
class UEdge:
    id: int
    u: int
    v: int

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class UndirectedGraph:
    node_count: int
    edges: tuple[UEdge, ...] = ()
    nodes: frozenset[int] = None  # type: ignore[assignment]
    _by_id: dict = field(default=None, repr=False, compare=False, hash=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(self.edges))
        nodes = frozenset(range(self.node_count)) if self.nodes is None else frozenset(self.nodes)
        object.__setattr__(self, "nodes", nodes)
        by_id = {}
        for e in self.edges:
            if e.id in by_id:
                raise GraphError(f"duplicate edge id {e.id}")
            if e.u not in nodes or e.v not in nodes:
                raise GraphError(f"edge {e.id} leaves the node set")
            by_id[e.id] = e
        object.__setattr__(self, "_by_id", by_id)

    @classmethod
    def from_pairs(cls, node_count: int, pairs: Iterable[tuple[int, int]]) -> "UndirectedGraph":
        return cls(node_count, tuple(UEdge(i, u, v) for i, (u, v) in enumerate(pairs)))

    def edge(self, eid: int) -> UEdge:
        return self._by_id[eid]

    def has_edge(self, eid: int) -> bool:
        return eid in self._by_id

    @property
    def edge_ids(self) -> frozenset[int]:
        return frozenset(self._by_id)

    def subgraph(self, nodes: Iterable[int], edge_ids: Iterable[int]) -> "UndirectedGraph":
        ids = set(edge_ids)
        return UndirectedGraph(self.node_count, tuple(e for e in self.edges if e.id in ids), frozenset(nodes))

    def induced(self, nodes: Iterable[int]) -> "UndirectedGraph":
        ns = frozenset(nodes)
        return UndirectedGraph(self.node_count, tuple(e for e in self.edges if e.u in ns and e.v in ns), ns)

    def is_subgraph_of(self, other: "UndirectedGraph") -> bool:
        return (self.node_count == other.node_count and self.nodes <= other.nodes
                and all(other.has_edge(e.id) and other.edge(e.id) == e for e in self.edges))

    def is_connected(self) -> bool:
        if len(self.nodes) <= 1:
            return True
        adj: dict[int, list[int]] = {x: [] for x in self.nodes}
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        root = min(self.nodes)
        seen, stack = {root}, [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.nodes)


def _matching_search(nodes: frozenset[int], edges: tuple[UEdge, ...]) -> frozenset[int] | None:
    inc: dict[int, list[UEdge]] = {x: [] for x in nodes}
    for e in edges:
        if e.u != e.v and e.u in inc and e.v in inc:
            inc[e.u].append(e)
            inc[e.v].append(e)

    @lru_cache(maxsize=None)
    def rec(left: frozenset[int]) -> tuple[int, ...] | None:
        if not left:
            return ()
        x = min(left)
        for e in inc[x]:
            y = e.other(x)
            if y in left:
                sub = rec(left - {x, y})
                if sub is not None:
                    return (e.id,) + sub
        return None

    if len(nodes) % 2:
        return None
    res = rec(nodes)
    return None if res is None else frozenset(res)


def find_perfect_matching(g: UndirectedGraph) -> frozenset[int] | None:
    """Edge ids of a perfect matching, or None.  Exhaustive, memoized on the set of unmatched nodes."""
    return _matching_search(g.nodes, g.edges)


def is_perfect_matching(g: UndirectedGraph, M: Iterable[int]) -> bool:
    covered: list[int] = []
    for eid in M:
        if not g.has_edge(eid):
            return False
        e = g.edge(eid)
        covered.extend((e.u, e.v))
    return len(covered) == len(set(covered)) and set(covered) == set(g.nodes)


def _matching_with(g: UndirectedGraph, eid: int) -> frozenset[int] | None:
    e = g.edge(eid)
    if e.u == e.v:
        return None
    rest = _matching_search(g.nodes - {e.u, e.v}, tuple(f for f in g.edges if f.id != eid))
    return None if rest is None else rest | {eid}


def is_matching_covered(g: UndirectedGraph) -> bool:
    """Connected, with at least one edge, and every edge in some perfect matching."""
    if not g.edges or not g.is_connected():
        return False
    return all(_matching_with(g, e.id) is not None for e in g.edges)


def is_elastic(g: UndirectedGraph, h: UndirectedGraph) -> bool:
    if not h.is_subgraph_of(g):
        raise GraphError("h is not a subgraph of g")
    return _matching_search(g.nodes - h.nodes, g.induced(g.nodes - h.nodes).edges) is not None


@dataclass(frozen=True)
class BidirectedFromMatching:
    graph: BidirectedGraph
    matching: frozenset[int]

    @staticmethod
    def origin(bid: int) -> int:
        return bid // 2

    @staticmethod
    def is_auxiliary(bid: int) -> bool:
        return bid % 2 == 1


def bidirect_from_matching(g: UndirectedGraph, M: Iterable[int]) -> BidirectedFromMatching:
    M = frozenset(M)
    if not is_perfect_matching(g, M):
        raise GraphError("M is not a perfect matching")
    out: list[BiEdge] = []
    for e in g.edges:
        if e.id in M:
            out.append(BiEdge(2 * e.id, e.u, Sign.IN, e.v, Sign.IN))
            out.append(BiEdge(2 * e.id + 1, e.u, Sign.OUT, e.v, Sign.OUT))
        else:
            out.append(BiEdge(2 * e.id, e.u, Sign.OUT, e.v, Sign.OUT))
    return BidirectedFromMatching(BidirectedGraph(g.node_count, tuple(out), g.nodes), M)


def _sub_bidirected(bg: BidirectedGraph, h: UndirectedGraph, M: frozenset[int]) -> BidirectedGraph:
    ids = []
    for e in h.edges:
        ids.append(2 * e.id)
        if e.id in M:
            ids.append(2 * e.id + 1)
    return bg.subgraph(h.nodes, ids)


@dataclass(frozen=True)
class AlternatingCycle:
    nodes: tuple[int, ...]  # closed: nodes[0] == nodes[-1]
    edges: tuple[int, ...]


def alternating_cycle_through(g: UndirectedGraph, M: Iterable[int], eid: int) -> AlternatingCycle | None:
    """An M-alternating cycle through the unmatched edge ``eid``, from the symmetric difference with a matching forced to contain it."""
    M = frozenset(M)
    if eid in M:
        raise GraphError("edge is matched")
    other = _matching_with(g, eid)
    if other is None:
        return None
    diff = M ^ other
    at: dict[int, list[UEdge]] = {}
    for i in diff:
        e = g.edge(i)
        at.setdefault(e.u, []).append(e)
        at.setdefault(e.v, []).append(e)
    first = g.edge(eid)
    nodes = [first.u, first.v]
    edges = [eid]
    while nodes[-1] != nodes[0]:
        x = nodes[-1]
        nxt = next(e for e in at[x] if e.id != edges[-1])
        edges.append(nxt.id)
        nodes.append(nxt.other(x))
    return AlternatingCycle(tuple(nodes), tuple(edges))


# ---------------------------------------------------------------- decompositions


@dataclass(frozen=True)
class OddEar:
    nodes: tuple[int, ...]
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", tuple(self.edges))


@dataclass(frozen=True)
class MatchingEarStep:
    ears: tuple[OddEar, ...]

    @property
    def kind(self) -> str:
        return "single" if len(self.ears) == 1 else "double"


@dataclass(frozen=True)
class MatchingEarDecomposition:
    base: UndirectedGraph
    steps: tuple[MatchingEarStep, ...] = ()


def _image(bg: BidirectedGraph, w: Walk) -> OddEar:
    if any(BidirectedFromMatching.is_auxiliary(s.edge) for s in w.steps):
        raise InvariantFailure("an ear of the bidirected host uses an auxiliary edge")
    ear = OddEar(tuple(w.nodes(bg)), tuple(BidirectedFromMatching.origin(s.edge) for s in w.steps))
    if len(ear.edges) % 2 == 0:
        raise InvariantFailure("an ear of the bidirected host has even length")
    return ear


def _grow(g: UndirectedGraph, h: UndirectedGraph, ears: Sequence[OddEar]) -> UndirectedGraph:
    nodes = set(h.nodes)
    ids = set(h.edge_ids)
    for ear in ears:
        nodes.update(ear.nodes)
        ids.update(ear.edges)
    return g.subgraph(nodes, ids)


def _same(a: UndirectedGraph, b: UndirectedGraph) -> bool:
    return a.nodes == b.nodes and a.edge_ids == b.edge_ids


def extending_matching(g: UndirectedGraph, h: UndirectedGraph) -> frozenset[int]:
    """A perfect matching of ``g`` whose restriction to ``h`` is a perfect matching of ``h``."""
    mh = find_perfect_matching(h)
    rest = _matching_search(g.nodes - h.nodes, g.induced(g.nodes - h.nodes).edges)
    if mh is None or rest is None:
        raise GraphError("h has no perfect matching or is not elastic")
    return mh | rest


def matching_decompose(g: UndirectedGraph, h: UndirectedGraph) -> MatchingEarDecomposition:
    if not h.is_subgraph_of(g):
        raise GraphError("h is not a subgraph of g")
    if not is_matching_covered(g):
        raise GraphError("g is not matching covered")
    if not is_matching_covered(h):
        raise GraphError("h is not matching covered")
    if not is_elastic(g, h):
        raise GraphError("h is not elastic")
    M = extending_matching(g, h)
    bg = bidirect_from_matching(g, M).graph
    cur = h
    steps: list[MatchingEarStep] = []
    while not _same(cur, g):
        hb = _sub_bidirected(bg, cur, M)
        ear = try_single_ear(bg, hb)
        if ear is not None:
            walks: tuple[Walk, ...] = (ear,)
        else:
            pair = try_double_ear(bg, hb)
            if pair is None:
                raise InvariantFailure("no single or double ear step found in the bidirected host")
            walks = pair.ears
        step = MatchingEarStep(tuple(_image(bg, w) for w in walks))
        cur = _grow(g, cur, step.ears)
        steps.append(step)
    return MatchingEarDecomposition(h, tuple(steps))


def _check_odd_ear(g: UndirectedGraph, cur: UndirectedGraph, ear: OddEar) -> str | None:
    if len(ear.nodes) != len(ear.edges) + 1 or not ear.edges:
        return "node and edge sequences do not fit together"
    for i, eid in enumerate(ear.edges):
        if not g.has_edge(eid):
            return f"edge {eid} not in g"
        e = g.edge(eid)
        if {e.u, e.v} != {ear.nodes[i], ear.nodes[i + 1]} or e.u == e.v:
            return f"edge {eid} does not join {ear.nodes[i]} and {ear.nodes[i + 1]}"
    if len(ear.edges) % 2 == 0:
        return "ear has even length"
    if len(set(ear.nodes)) != len(ear.nodes):
        return "ear is not a simple path with distinct ends"
    if ear.nodes[0] not in cur.nodes or ear.nodes[-1] not in cur.nodes:
        return "an end lies outside the host"
    if any(x in cur.nodes for x in ear.nodes[1:-1]):
        return "an inner node lies in the host"
    if any(cur.has_edge(e) for e in ear.edges):
        return "ear reuses a host edge"
    return None


def verify_matching_decomposition(g: UndirectedGraph, d: MatchingEarDecomposition) -> Verdict:
    if not d.base.is_subgraph_of(g):
        return Verdict.bad("base", "base is not a subgraph of g", -1)
    if not is_matching_covered(d.base) or not is_elastic(g, d.base):
        return Verdict.bad("base", "base is not an elastic matching covered subgraph", -1)
    cur = d.base
    for i, step in enumerate(d.steps):
        if len(step.ears) not in (1, 2):
            return Verdict.bad("step-size", "a step adds one or two ears", i)
        for ear in step.ears:
            why = _check_odd_ear(g, cur, ear)
            if why:
                return Verdict.bad("ear", why, i)
        if len(step.ears) == 2 and set(step.ears[0].nodes) & set(step.ears[1].nodes):
            return Verdict.bad("pair-overlap", "ears of a double step share a node", i)
        cur = _grow(g, cur, step.ears)
        if not is_elastic(g, cur):
            return Verdict.bad("not-elastic", "subgraph after this step is not elastic", i)
        if not is_matching_covered(cur):
            return Verdict.bad("not-covered", "subgraph after this step is not matching covered", i)
    if not _same(cur, g):
        return Verdict.bad("final", "decomposition does not end at g", len(d.steps))
    return Verdict.good()
