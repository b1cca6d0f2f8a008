"""Adding nonstandard edges to a strongly connected digraph two at a time.

Also home to the digraph primitives used around that result: the in-cut
function, the family of sets with exactly one entering arc, S–T path
collections and node splitting.

Nonstandard edges entering both ends form E⁺, those leaving both ends form E⁻.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .connectivity import digraph_strongly_connected, edges_in_cycles, bidirected_strongly_connected
from .graph_core import BiEdge, BidirectedGraph, GraphError, Sign, Verdict, arc
from .skew_core import DirectedWalk


class InvariantFailure(RuntimeError):
    """A search that must succeed on valid input came back empty."""


@dataclass(frozen=True)
class Digraph:
    """Plain multi-digraph; arc ids are positions in ``arcs``."""

    node_count: int
    arcs: tuple[tuple[int, int], ...] = ()
    _out: tuple = field(default=None, repr=False, compare=False, hash=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple((int(t), int(h)) for t, h in self.arcs))
        out: list[list[int]] = [[] for _ in range(self.node_count)]
        for a, (t, h) in enumerate(self.arcs):
            if not (0 <= t < self.node_count and 0 <= h < self.node_count):
                raise GraphError(f"arc {a} leaves the node range")
            out[t].append(a)
        object.__setattr__(self, "_out", tuple(tuple(x) for x in out))

    @classmethod
    def from_bidirected(cls, g: BidirectedGraph) -> "Digraph":
        if not g.is_all_standard():
            raise GraphError("graph has nonstandard edges")
        return cls(g.node_count, tuple((e.u, e.v) if e.su is Sign.OUT else (e.v, e.u) for e in g.edges))

    def to_bidirected(self) -> BidirectedGraph:
        return BidirectedGraph(self.node_count, tuple(arc(i, t, h) for i, (t, h) in enumerate(self.arcs)))

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def tail(self, a: int) -> int:
        return self.arcs[a][0]

    def head(self, a: int) -> int:
        return self.arcs[a][1]

    def out_arcs(self, v: int) -> tuple[int, ...]:
        return self._out[v]


def cut_phi(D: Digraph, X: Iterable[int]) -> int:
    """Number of arcs entering ``X``."""
    xs = set(X)
    return sum(1 for t, h in D.arcs if h in xs and t not in xs)


def in_family_f1(D: Digraph, X: Iterable[int]) -> bool:
    return cut_phi(D, X) == 1


def is_crossing(n: int, X: Iterable[int], Y: Iterable[int]) -> bool:
    X, Y = set(X), set(Y)
    return bool(X & Y) and len(X | Y) != n and bool(X - Y) and bool(Y - X)


# ---------------------------------------------------------------- S–T collections


@dataclass(frozen=True)
class PathCollection:
    paths: tuple[DirectedWalk, ...]
    sources: tuple[int, ...]
    sinks: tuple[int, ...]


@dataclass(frozen=True)
class CutCertificate:
    """``X`` with fewer entering arcs than its net demand ``|T∩X| - |S∩X|``."""

    X: frozenset[int]
    phi: int
    demand: int


def validate_collection(D: Digraph, coll: PathCollection, S: Sequence[int], T: Sequence[int]) -> Verdict:
    used: set[int] = set()
    for i, p in enumerate(coll.paths):
        if not p.is_valid(D):
            return Verdict.bad("path", f"path {i} is not a walk", i)
        for a in p.arcs:
            if a in used:
                return Verdict.bad("shared-arc", f"arc {a} used twice", i)
            used.add(a)
    starts = Counter(p.start for p in coll.paths)
    ends = Counter(p.end(D) for p in coll.paths)
    if starts != Counter(S):
        return Verdict.bad("sources", f"path starts {sorted(starts.elements())} ≠ {sorted(S)}")
    if ends != Counter(T):
        return Verdict.bad("sinks", f"path ends {sorted(ends.elements())} ≠ {sorted(T)}")
    return Verdict.good()


def verify_cut(D: Digraph, cert: CutCertificate, S: Sequence[int], T: Sequence[int]) -> bool:
    X = cert.X
    demand = sum(1 for t in T if t in X) - sum(1 for s in S if s in X)
    return cut_phi(D, X) == cert.phi and demand == cert.demand and cert.phi < demand


class _Flow:
    def __init__(self, n: int) -> None:
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.tag: list[int] = []

    def add(self, u: int, v: int, c: int, tag: int = -1) -> None:
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.tag.append(tag)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)
        self.tag.append(-1)

    def bfs(self, src: int) -> list[int]:
        pred = [-2] * self.n
        pred[src] = -1
        q = deque([src])
        while q:
            u = q.popleft()
            for e in self.adj[u]:
                v = self.to[e]
                if self.cap[e] > 0 and pred[v] == -2:
                    pred[v] = e
                    q.append(v)
        return pred

    def maxflow(self, src: int, snk: int) -> int:
        total = 0
        while True:
            pred = self.bfs(src)
            if pred[snk] == -2:
                return total
            v = snk
            while v != src:
                e = pred[v]
                self.cap[e] -= 1
                self.cap[e ^ 1] += 1
                v = self.to[e ^ 1]
            total += 1


def st_collection(D: Digraph, S: Sequence[int], T: Sequence[int]) -> PathCollection | CutCertificate:
    """Arc-disjoint paths realizing the multiplicities of ``S`` and ``T``, or a cut showing none exist."""
    if len(S) != len(T):
        raise GraphError("source and sink multisets differ in size")
    n = D.node_count
    src, snk = n, n + 1
    fl = _Flow(n + 2)
    for a, (t, h) in enumerate(D.arcs):
        fl.add(t, h, 1, a)
    for s, c in sorted(Counter(S).items()):
        fl.add(src, s, c)
    for t, c in sorted(Counter(T).items()):
        fl.add(t, snk, c)
    value = fl.maxflow(src, snk)
    if value < len(S):
        pred = fl.bfs(src)
        X = frozenset(v for v in range(n) if pred[v] == -2)
        demand = sum(1 for t in T if t in X) - sum(1 for s in S if s in X)
        return CutCertificate(X, cut_phi(D, X), demand)
    # flow on a forward edge = capacity of its reverse twin
    flow = {e: fl.cap[e ^ 1] for e in range(0, len(fl.to), 2)}
    paths = []
    for _ in range(len(S)):
        v = src
        steps: list[int] = []  # flow edge ids
        nodes = [src]
        while v != snk:
            e = next(e for e in fl.adj[v] if e % 2 == 0 and flow[e] > 0)
            flow[e] -= 1
            v = fl.to[e]
            if v in nodes:  # closed a circulation; drop it
                k = nodes.index(v)
                del steps[k:]
                del nodes[k + 1:]
            else:
                steps.append(e)
                nodes.append(v)
        start = fl.to[steps[0]]
        arcs = tuple(fl.tag[e] for e in steps[1:-1])
        paths.append(DirectedWalk(start, arcs))
    paths.sort(key=lambda p: (p.start, p.arcs))
    return PathCollection(tuple(paths), tuple(sorted(S)), tuple(sorted(T)))


# ---------------------------------------------------------------- splitting


def partition_nonstandard(E: Iterable[BiEdge]) -> tuple[list[BiEdge], list[BiEdge]]:
    """Split into (entering both ends, leaving both ends)."""
    E = list(E)
    if any(e.is_standard for e in E):
        raise GraphError("edge set contains a standard edge")
    return [e for e in E if e.su is Sign.IN], [e for e in E if e.su is Sign.OUT]


@dataclass(frozen=True)
class Split:
    digraph: BidirectedGraph
    edges: tuple[BiEdge, ...]
    origin: tuple[int, ...]  # original node of each new node


def split_nodes(D: BidirectedGraph, E: Sequence[BiEdge]) -> Split:
    """Blow every node up into entry copies v⁺ and exit copies v⁻ so that nonstandard ends are distinct.

    Arcs run v⁺ → v⁻ inside a node and u⁻ → v⁺ for each original arc (u, v).
    Entering ends of E-edges go to fresh entry copies, leaving ends to
    fresh exit copies; each node gets as many copy pairs as its busier side
    needs, and at least one.
    """
    if not D.is_all_standard():
        raise GraphError("D must consist of standard arcs")
    if not D.edges:
        raise GraphError("D needs at least one arc for the split to stay strongly connected")
    partition_nonstandard(E)
    need_in = Counter()
    need_out = Counter()
    for e in E:
        for x, sg in (e.end0, e.end1):
            (need_in if sg is Sign.IN else need_out)[x] += 1
    plus: dict[int, list[int]] = {}
    minus: dict[int, list[int]] = {}
    origin: list[int] = []
    for v in sorted(D.nodes):
        k = max(need_in[v], need_out[v], 1)
        plus[v] = list(range(len(origin), len(origin) + k))
        origin.extend([v] * k)
        minus[v] = list(range(len(origin), len(origin) + k))
        origin.extend([v] * k)
    arcs: list[tuple[int, int]] = []
    for v in sorted(D.nodes):
        arcs.extend((p, m) for p in plus[v] for m in minus[v])
    dg = Digraph.from_bidirected(D)
    for t, h in dg.arcs:
        arcs.extend((m, p) for m in minus[t] for p in plus[h])
    n = len(origin)
    digraph = Digraph(n, tuple(arcs)).to_bidirected()
    nxt_in = {v: iter(plus[v]) for v in plus}
    nxt_out = {v: iter(minus[v]) for v in minus}
    new_edges = []
    for i, e in enumerate(E):
        ends = []
        for x, sg in (e.end0, e.end1):
            ends.append(next(nxt_in[x]) if sg is Sign.IN else next(nxt_out[x]))
        new_edges.append(BiEdge(len(arcs) + i, ends[0], e.su, ends[1], e.sv))
    return Split(digraph, tuple(new_edges), tuple(origin))


# ---------------------------------------------------------------- the pair search


def _check_two_edges_input(D: BidirectedGraph, E: Sequence[BiEdge]) -> None:
    if not E:
        raise GraphError("E is empty")
    if not D.is_all_standard():
        raise GraphError("D has a nonstandard edge")
    partition_nonstandard(E)
    ids = {e.id for e in E}
    if len(ids) != len(E) or ids & D.edge_ids:
        raise GraphError("edge ids of E must be distinct from each other and from D")
    if any(x not in D.nodes for e in E for x in (e.u, e.v)):
        raise GraphError("E-edge ends must be nodes of D")
    if not digraph_strongly_connected(D):
        raise GraphError("D is not strongly connected")
    if not bidirected_strongly_connected(D.with_edges(E)):
        raise GraphError("D + E is not strongly connected")


def two_edges(D: BidirectedGraph, E: Sequence[BiEdge]) -> tuple[BiEdge, BiEdge]:
    """The first pair (in the order of ``E``) whose addition keeps ``D`` strongly connected."""
    _check_two_edges_input(D, E)
    for e1, e2 in combinations(E, 2):
        if edges_in_cycles(D.with_edges((e1, e2)), (e1.id, e2.id)):
            return e1, e2
    raise InvariantFailure("no pair of E keeps D strongly connected")
