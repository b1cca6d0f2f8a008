"""Bidirected multigraphs and walks over them.

Every edge has two end-slots; each slot names a node and whether the edge
leaves (``Sign.OUT``) or enters (``Sign.IN``) that node.  A walk records, per
step, which slot it departed from, so loops and parallel edges are never
ambiguous.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple


class GraphError(ValueError):
    """Structural problem with a graph or with an object referring to one."""


class Sign(enum.Enum):
    OUT = "+"
    IN = "-"

    @property
    def flipped(self) -> "Sign":
        return Sign.IN if self is Sign.OUT else Sign.OUT


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification routine.

    ``code`` is a short machine-readable reason, ``index`` locates the first
    violation (step, edge, condition number ... depending on the checker).
    """

    ok: bool
    code: str = "ok"
    message: str = ""
    index: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def good(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def bad(cls, code: str, message: str = "", index: int | None = None) -> "Verdict":
        return cls(False, code, message, index)


@dataclass(frozen=True)
class BiEdge:
    id: int
    u: int
    su: Sign
    v: int
    sv: Sign

    @property
    def end0(self) -> tuple[int, Sign]:
        return (self.u, self.su)

    @property
    def end1(self) -> tuple[int, Sign]:
        return (self.v, self.sv)

    def end(self, slot: int) -> tuple[int, Sign]:
        return (self.u, self.su) if slot == 0 else (self.v, self.sv)

    def node(self, slot: int) -> int:
        return self.u if slot == 0 else self.v

    def sign(self, slot: int) -> Sign:
        return self.su if slot == 0 else self.sv

    @property
    def is_standard(self) -> bool:
        return self.su is not self.sv

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    @property
    def kind(self) -> str:
        if self.is_standard:
            return "standard"
        return "leaving" if self.su is Sign.OUT else "entering"

    def key(self) -> tuple:
        """Orientation-free description of the signed ends, for multiset comparison."""
        a = (self.u, self.su.value)
        b = (self.v, self.sv.value)
        return (a, b) if a <= b else (b, a)

    def with_id(self, new_id: int) -> "BiEdge":
        return BiEdge(new_id, self.u, self.su, self.v, self.sv)


def arc(eid: int, tail: int, head: int) -> BiEdge:
    return BiEdge(eid, tail, Sign.OUT, head, Sign.IN)


@dataclass(frozen=True)
class BidirectedGraph:
    """Immutable bidirected multigraph.

    ``node_count`` fixes the id universe ``0..node_count-1``.  ``nodes`` is the
    set of nodes actually present (all of them unless the graph is a subgraph
    of a larger host, in which case edge ids are shared with the host).
    """

    node_count: int
    edges: tuple[BiEdge, ...] = ()
    nodes: frozenset[int] = None  # type: ignore[assignment]
    _by_id: dict = field(default=None, repr=False, compare=False, hash=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.nodes is None:
            object.__setattr__(self, "nodes", frozenset(range(self.node_count)))
        else:
            object.__setattr__(self, "nodes", frozenset(self.nodes))
        by_id = {}
        for e in self.edges:
            if e.id in by_id:
                raise GraphError(f"duplicate edge id {e.id}")
            for x in (e.u, e.v):
                if x not in self.nodes:
                    raise GraphError(f"edge {e.id} references node {x} outside the graph")
            by_id[e.id] = e
        for x in self.nodes:
            if not 0 <= x < self.node_count:
                raise GraphError(f"node {x} outside 0..{self.node_count - 1}")
        object.__setattr__(self, "_by_id", by_id)

    @classmethod
    def from_tuples(cls, node_count: int, edges: Iterable[tuple[int, int, str, str]]) -> "BidirectedGraph":
        """Build from ``(u, v, sign_u, sign_v)`` tuples with signs ``'+'``/``'-'``; ids are positional."""
        return cls(node_count, tuple(
            BiEdge(i, u, Sign(su), v, Sign(sv)) for i, (u, v, su, sv) in enumerate(edges)))

    def edge(self, eid: int) -> BiEdge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise GraphError(f"no edge with id {eid}") from None

    def has_edge(self, eid: int) -> bool:
        return eid in self._by_id

    @property
    def edge_ids(self) -> frozenset[int]:
        return frozenset(self._by_id)

    def incident(self, x: int) -> Iterator[tuple[BiEdge, int]]:
        """Yield ``(edge, slot)`` for every end-slot sitting at node ``x``."""
        for e in self.edges:
            if e.u == x:
                yield e, 0
            if e.v == x:
                yield e, 1

    def is_all_standard(self) -> bool:
        return all(e.is_standard for e in self.edges)

    def subgraph(self, nodes: Iterable[int], edge_ids: Iterable[int]) -> "BidirectedGraph":
        ids = set(edge_ids)
        return BidirectedGraph(self.node_count, tuple(e for e in self.edges if e.id in ids), frozenset(nodes))

    def with_edges(self, extra: Iterable[BiEdge], extra_nodes: Iterable[int] = ()) -> "BidirectedGraph":
        extra = tuple(extra)
        nodes = set(self.nodes).union(extra_nodes)
        for e in extra:
            nodes.update((e.u, e.v))
        edges = sorted(self.edges + extra, key=lambda e: e.id)
        return BidirectedGraph(self.node_count, tuple(edges), frozenset(nodes))

    def without_edges(self, edge_ids: Iterable[int]) -> "BidirectedGraph":
        drop = set(edge_ids)
        return BidirectedGraph(self.node_count, tuple(e for e in self.edges if e.id not in drop), self.nodes)

    def canonical(self) -> tuple:
        """Node set plus sorted multiset of signed-end keys; ignores edge ids."""
        return (self.node_count, tuple(sorted(self.nodes)), tuple(sorted(e.key() for e in self.edges)))

    def renumbered(self) -> "BidirectedGraph":
        """Same graph with edge ids replaced by positions."""
        return BidirectedGraph(self.node_count, tuple(e.with_id(i) for i, e in enumerate(self.edges)), self.nodes)

    def is_subgraph_of(self, other: "BidirectedGraph") -> bool:
        if self.node_count != other.node_count or not self.nodes <= other.nodes:
            return False
        return all(other.has_edge(e.id) and other.edge(e.id) == e for e in self.edges)


class Step(NamedTuple):
    """One traversal of an edge, leaving through ``slot`` and arriving through the other."""

    edge: int
    slot: int

    @property
    def from_slot(self) -> int:
        return self.slot

    @property
    def to_slot(self) -> int:
        return 1 - self.slot

    def reversed(self) -> "Step":
        return Step(self.edge, 1 - self.slot)


@dataclass(frozen=True)
class Walk:
    start: int
    steps: tuple[Step, ...] = ()
    cyclic: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(Step(*s) for s in self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(s.edge for s in self.steps)

    def nodes(self, g: BidirectedGraph) -> list[int]:
        """Node sequence ``v_0 .. v_k`` as recorded by the arrival slots."""
        seq = [self.start]
        for st in self.steps:
            seq.append(g.edge(st.edge).node(st.to_slot))
        return seq

    def end(self, g: BidirectedGraph) -> int:
        if not self.steps:
            return self.start
        last = self.steps[-1]
        return g.edge(last.edge).node(last.to_slot)

    def reversed(self, g: BidirectedGraph) -> "Walk":
        return Walk(self.end(g), tuple(s.reversed() for s in reversed(self.steps)), self.cyclic)

    def rotated(self, g: BidirectedGraph, k: int) -> "Walk":
        """Cyclic shift so that step ``k`` comes first (cyclic walks only)."""
        if not self.cyclic:
            raise GraphError("only cyclic walks can be rotated")
        k %= max(len(self.steps), 1)
        steps = self.steps[k:] + self.steps[:k]
        start = g.edge(steps[0].edge).node(steps[0].from_slot) if steps else self.start
        return Walk(start, steps, True)


def validate_walk(g: BidirectedGraph, w: Walk) -> Verdict:
    """Check chaining and the transit condition at every interior node.

    Raises :class:`GraphError` for an edge id missing from ``g``; every other
    defect is reported through the verdict, with ``index`` the smallest step
    index at which it is detected (for a transit failure, the index of the
    step that departs from the offending node).
    """
    for i, st in enumerate(w.steps):
        if not g.has_edge(st.edge):
            raise GraphError(f"step {i} uses unknown edge {st.edge}")
        if st.slot not in (0, 1):
            raise GraphError(f"step {i} has slot {st.slot}")
    if w.start not in g.nodes:
        return Verdict.bad("chain", f"start node {w.start} not in graph", 0)
    at = w.start
    prev_sign: Sign | None = None
    for i, st in enumerate(w.steps):
        e = g.edge(st.edge)
        node, sign = e.end(st.from_slot)
        if node != at:
            return Verdict.bad("chain", f"step {i} leaves {node}, walk is at {at}", i)
        if prev_sign is not None and prev_sign is sign:
            return Verdict.bad("transit", f"no transit pair at node {at}", i)
        at, prev_sign = e.end(st.to_slot)
    if w.cyclic:
        if not w.steps:
            return Verdict.bad("cyclic", "cyclic walk needs at least one edge", 0)
        if at != w.start:
            return Verdict.bad("cyclic", "cyclic walk does not return to its start", len(w.steps))
        first_sign = g.edge(w.steps[0].edge).sign(w.steps[0].from_slot)
        if prev_sign is first_sign:
            return Verdict.bad("transit", f"wrap-around pair at {at} is not transit", len(w.steps))
    return Verdict.good()


def is_edge_simple(w: Walk) -> bool:
    ids = w.edge_ids
    return len(ids) == len(set(ids))


def is_node_simple(g: BidirectedGraph, w: Walk) -> bool:
    """All of ``v_0..v_k`` distinct, except that ``v_0 == v_k`` is allowed."""
    seq = w.nodes(g)
    k = len(seq) - 1
    if k <= 0:
        return True
    head, tail = seq[:k], seq[1:]
    return len(set(head)) == len(head) and len(set(tail)) == len(tail)


def concat_walks(g: BidirectedGraph, first: Walk, second: Walk) -> Walk:
    if first.end(g) != second.start:
        raise GraphError("walks do not share an endpoint")
    return Walk(first.start, first.steps + second.steps)


def underlying_connected(g: BidirectedGraph) -> bool:
    if len(g.nodes) <= 1:
        return True
    adj: dict[int, set[int]] = {x: set() for x in g.nodes}
    for e in g.edges:
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)
    root = min(g.nodes)
    seen = {root}
    stack = [root]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(g.nodes)

