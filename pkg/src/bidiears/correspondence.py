"""Moving between bidirected graphs and skew-symmetric graphs.

Node ``i`` of a bidirected graph becomes the skew nodes ``2i`` (the original
copy, side V1) and ``2i + 1`` (its mate).  The edge in position ``k`` becomes
arcs ``2k`` and ``2k + 1``; arc ``2k`` runs from the end0 side to the end1
side of the edge.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph_core import BiEdge, BidirectedGraph, GraphError, Sign, Step, Walk, validate_walk
from .skew_core import DirectedWalk, SkewSymmetricGraph, is_regular, validate_symmetry


@dataclass(frozen=True)
class Partition:
    """``side[v]`` is True for nodes of V1 (the copies that survive as bidirected nodes)."""

    side: tuple[bool, ...]

    @classmethod
    def canonical(cls, node_count: int) -> "Partition":
        return cls(tuple(v % 2 == 0 for v in range(node_count)))

    def is_valid_for(self, g: SkewSymmetricGraph) -> bool:
        return len(self.side) == g.node_count and all(
            self.side[v] != self.side[g.mate(v)] for v in range(g.node_count))

    def v1(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s]


def _skew_end(x: int, sign: Sign, as_tail: bool) -> int:
    # tail side: leaving x means the arc starts at x; head side: entering x means it ends at x
    keep = sign is Sign.OUT if as_tail else sign is Sign.IN
    return 2 * x if keep else 2 * x + 1


def to_skew(g: BidirectedGraph) -> tuple[SkewSymmetricGraph, Partition]:
    arcs: list[tuple[int, int]] = []
    mates: list[int] = []
    for k, e in enumerate(g.edges):
        t = _skew_end(e.u, e.su, as_tail=True)
        h = _skew_end(e.v, e.sv, as_tail=False)
        arcs.append((t, h))
        arcs.append((h ^ 1, t ^ 1))
        mates.extend([2 * k + 1, 2 * k])
    n = 2 * g.node_count
    return SkewSymmetricGraph(n, tuple(arcs), tuple(mates)), Partition.canonical(n)


def _edge_pairs(g: SkewSymmetricGraph) -> list[int]:
    """Representative arc (the smaller id) of each mate pair, in order of appearance."""
    return [a for a in range(g.arc_count) if a < g.arc_mate[a]]


def to_bidirected(g: SkewSymmetricGraph, pi: Partition) -> BidirectedGraph:
    if not validate_symmetry(g):
        raise GraphError("graph is not skew-symmetric")
    if not pi.is_valid_for(g):
        raise GraphError("partition does not separate every node from its mate")
    index = {v: i for i, v in enumerate(pi.v1())}

    def rep(x: int) -> int:
        return index[x] if pi.side[x] else index[g.mate(x)]

    edges = []
    for k, a in enumerate(_edge_pairs(g)):
        t, h = g.arcs[a]
        edges.append(BiEdge(k, rep(t), Sign.OUT if pi.side[t] else Sign.IN,
                            rep(h), Sign.IN if pi.side[h] else Sign.OUT))
    return BidirectedGraph(len(index), tuple(edges))


def map_walk_tau(g: SkewSymmetricGraph, pi: Partition, p: DirectedWalk) -> Walk:
    """Image of a regular directed walk in the bidirected graph ``to_bidirected(g, pi)``."""
    if not p.is_valid(g):
        raise GraphError("not a walk of the skew-symmetric graph")
    if not is_regular(g, p):
        raise GraphError("walk contains a pair of mate arcs")
    edge_of = {}
    for k, a in enumerate(_edge_pairs(g)):
        edge_of[a] = (k, 0)
        edge_of[g.arc_mate[a]] = (k, 1)
    index = {v: i for i, v in enumerate(pi.v1())}
    start = index[p.start] if pi.side[p.start] else index[g.mate(p.start)]
    return Walk(start, tuple(Step(*edge_of[a]) for a in p.arcs))


def lift_walk(g: SkewSymmetricGraph, pi: Partition, w: Walk) -> DirectedWalk:
    """The unique directed walk whose image is ``w``.

    An empty walk lifts to the V1 copy of its node.
    """
    bg = to_bidirected(g, pi)
    if not validate_walk(bg, w):
        raise GraphError("not a valid walk of the bidirected graph")
    pairs = _edge_pairs(g)
    v1 = pi.v1()
    if not w.steps:
        return DirectedWalk(v1[w.start])
    arcs = tuple(pairs[s.edge] if s.slot == 0 else g.arc_mate[pairs[s.edge]] for s in w.steps)
    return DirectedWalk(g.tail(arcs[0]), arcs)


def flip_equivalence(g: BidirectedGraph, xs: Iterable[int]) -> BidirectedGraph:
    """Reverse every edge end sitting at a node of ``xs``."""
    xs = set(xs)
    out = []
    for e in g.edges:
        su = e.su.flipped if e.u in xs else e.su
        sv = e.sv.flipped if e.v in xs else e.sv
        out.append(BiEdge(e.id, e.u, su, e.v, sv))
    return BidirectedGraph(g.node_count, tuple(out), g.nodes)


def lift_in_host(g: BidirectedGraph, w: Walk) -> DirectedWalk:
    """Lift a walk of ``g`` into ``to_skew(g)`` (arc ids follow edge positions in ``g``)."""
    pos = {e.id: k for k, e in enumerate(g.edges)}
    if not w.steps:
        return DirectedWalk(2 * w.start)
    arcs = tuple(2 * pos[s.edge] + s.slot for s in w.steps)
    first = g.edge(w.steps[0].edge)
    return DirectedWalk(_skew_end(*first.end(w.steps[0].slot), as_tail=True), arcs)


def project_in_host(g: BidirectedGraph, p: DirectedWalk, cyclic: bool = False) -> Walk:
    """Inverse of :func:`lift_in_host` for walks of ``to_skew(g)``."""
    return Walk(p.start // 2, tuple(Step(g.edges[a // 2].id, a % 2) for a in p.arcs), cyclic)
