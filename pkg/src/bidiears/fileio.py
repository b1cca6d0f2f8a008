"""Text formats for graphs and decompositions.

Graph file::

    # comment
    bidirected 4          (or: digraph 4, undirected 4)
    nodes 0 1 2           (optional; default is every node)
    edge 0 1 + -          (undirected files omit the signs)

Edge ids are line positions among ``edge`` lines.  ``+`` means the edge
leaves that end, ``-`` that it enters.

Decomposition file::

    decomposition bidirected      (or: decomposition undirected)
    base-nodes 0 1 2
    base-edges 0 1 2
    step single
    ear nodes 0 3 1 edges 4 5 slots 0 1
    step double
    ear ...
    ear ...

Node and edge ids in a decomposition refer to the host graph file.  ``slots``
(bidirected only) gives the end each edge is left through; when omitted it is
read off the node sequence.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .ear_decomp import EarDecomposition, EarStep
from .graph_core import BiEdge, BidirectedGraph, GraphError, Sign, Step, Walk
from .matching_ears import MatchingEarDecomposition, MatchingEarStep, OddEar, UEdge, UndirectedGraph

KINDS = ("bidirected", "digraph", "undirected")


class ParseError(GraphError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class GraphFile:
    kind: str
    graph: Union[BidirectedGraph, UndirectedGraph]


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield no, body


def _int(tok: str, no: int, n: int | None = None) -> int:
    try:
        x = int(tok)
    except ValueError:
        raise ParseError(no, f"expected an integer, got {tok!r}") from None
    if x < 0 or (n is not None and x >= n):
        raise ParseError(no, f"node {x} out of range")
    return x


def _sign(tok: str, no: int) -> Sign:
    if tok == "+":
        return Sign.OUT
    if tok == "-":
        return Sign.IN
    raise ParseError(no, f"bad sign token {tok!r}")


def parse_graph(text: str) -> GraphFile:
    lines = list(_lines(text))
    if not lines:
        raise ParseError(1, "missing header")
    no, head = lines[0]
    if len(head) != 2 or head[0] not in KINDS:
        raise ParseError(no, "header must be '<bidirected|digraph|undirected> <node_count>'")
    kind, n = head[0], _int(head[1], no)
    nodes: list[int] | None = None
    bi: list[BiEdge] = []
    un: list[UEdge] = []
    for no, toks in lines[1:]:
        if toks[0] == "nodes":
            if nodes is not None:
                raise ParseError(no, "duplicate nodes line")
            nodes = [_int(t, no, n) for t in toks[1:]]
        elif toks[0] == "edge":
            if kind == "undirected":
                if len(toks) != 3:
                    raise ParseError(no, "undirected edge lines are 'edge <u> <v>'")
                un.append(UEdge(len(un), _int(toks[1], no, n), _int(toks[2], no, n)))
            else:
                if len(toks) != 5:
                    raise ParseError(no, "edge lines are 'edge <u> <v> <sign_u> <sign_v>'")
                u, v = _int(toks[1], no, n), _int(toks[2], no, n)
                su, sv = _sign(toks[3], no), _sign(toks[4], no)
                if kind == "digraph" and (su, sv) != (Sign.OUT, Sign.IN):
                    raise ParseError(no, "digraph edges must be '+ -'")
                bi.append(BiEdge(len(bi), u, su, v, sv))
        else:
            raise ParseError(no, f"unknown directive {toks[0]!r}")
    node_set = None if nodes is None else frozenset(nodes)
    try:
        if kind == "undirected":
            return GraphFile(kind, UndirectedGraph(n, tuple(un), node_set))
        return GraphFile(kind, BidirectedGraph(n, tuple(bi), node_set))
    except GraphError as exc:
        raise ParseError(no, str(exc)) from None


def emit_graph(g: Union[BidirectedGraph, UndirectedGraph], kind: str | None = None) -> str:
    if isinstance(g, UndirectedGraph):
        kind = "undirected"
    elif kind is None:
        kind = "digraph" if g.edges and g.is_all_standard() and all(e.su is Sign.OUT for e in g.edges) else "bidirected"
    out = [f"{kind} {g.node_count}"]
    if set(g.nodes) != set(range(g.node_count)):
        out.append(" ".join(["nodes", *map(str, sorted(g.nodes))]))
    for e in g.edges:
        if kind == "undirected":
            out.append(f"edge {e.u} {e.v}")
        else:
            out.append(f"edge {e.u} {e.v} {e.su.value} {e.sv.value}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- subgraphs by edge matching


def match_subgraph(host: Union[BidirectedGraph, UndirectedGraph],
                   sub: Union[BidirectedGraph, UndirectedGraph]) -> Union[BidirectedGraph, UndirectedGraph]:
    """Re-express ``sub`` with the edge ids of ``host``, pairing edges with identical ends in file order."""
    if sub.node_count != host.node_count:
        raise GraphError("subgraph file has a different node count")
    undirected = isinstance(host, UndirectedGraph)
    if undirected != isinstance(sub, UndirectedGraph):
        raise GraphError("subgraph and host are of different kinds")

    def key(e) -> tuple:
        return tuple(sorted((e.u, e.v))) if undirected else e.key()

    pool: dict[tuple, list[int]] = {}
    for e in host.edges:
        pool.setdefault(key(e), []).append(e.id)
    ids = []
    for e in sub.edges:
        free = pool.get(key(e))
        if not free:
            raise GraphError(f"subgraph edge {e.id} has no counterpart in the host")
        ids.append(free.pop(0))
    return host.subgraph(sub.nodes, ids)


# ---------------------------------------------------------------- decompositions


def emit_decomposition(d: Union[EarDecomposition, MatchingEarDecomposition], G=None) -> str:
    """``G`` is needed for bidirected decompositions to print node sequences."""
    undirected = isinstance(d, MatchingEarDecomposition)
    out = ["decomposition " + ("undirected" if undirected else "bidirected")]
    out.append(" ".join(["base-nodes", *map(str, sorted(d.base.nodes))]))
    out.append(" ".join(["base-edges", *map(str, sorted(e.id for e in d.base.edges))]))
    for step in d.steps:
        out.append(f"step {step.kind}")
        for ear in step.ears:
            if undirected:
                nodes, edges, slots = ear.nodes, ear.edges, None
            else:
                if G is None:
                    raise GraphError("host graph needed to emit a bidirected decomposition")
                nodes, edges, slots = ear.nodes(G), ear.edge_ids, [s.slot for s in ear.steps]
            line = ["ear", "nodes", *map(str, nodes), "edges", *map(str, edges)]
            if slots is not None:
                line += ["slots", *map(str, slots)]
            out.append(" ".join(line))
    return "\n".join(out) + "\n"


def _sections(toks: Sequence[str], no: int) -> dict[str, list[int]]:
    out: dict[str, list[int]] = {}
    cur = None
    for t in toks:
        if t in ("nodes", "edges", "slots"):
            if t in out:
                raise ParseError(no, f"duplicate {t} section")
            cur = out[t] = []
        elif cur is None:
            raise ParseError(no, f"unexpected token {t!r}")
        else:
            cur.append(_int(t, no))
    if "nodes" not in out or "edges" not in out:
        raise ParseError(no, "ear lines need 'nodes' and 'edges' sections")
    return out


def _walk(G: BidirectedGraph, sec: dict[str, list[int]], no: int) -> Walk:
    nodes, edges = sec["nodes"], sec["edges"]
    if len(nodes) != len(edges) + 1:
        raise ParseError(no, "an ear with k edges needs k + 1 nodes")
    slots = sec.get("slots")
    if slots is not None and len(slots) != len(edges):
        raise ParseError(no, "one slot per edge")
    steps = []
    for i, eid in enumerate(edges):
        if not G.has_edge(eid):
            raise ParseError(no, f"unknown edge {eid}")
        e = G.edge(eid)
        if slots is not None:
            slot = slots[i]
            if slot not in (0, 1):
                raise ParseError(no, f"slot {slot} is not 0 or 1")
        elif (e.u, e.v) == (nodes[i], nodes[i + 1]):
            slot = 0
        elif (e.v, e.u) == (nodes[i], nodes[i + 1]):
            slot = 1
        else:
            raise ParseError(no, f"edge {eid} does not join {nodes[i]} and {nodes[i + 1]}")
        if (e.node(slot), e.node(1 - slot)) != (nodes[i], nodes[i + 1]):
            raise ParseError(no, f"edge {eid} with slot {slot} does not join {nodes[i]} and {nodes[i + 1]}")
        steps.append(Step(eid, slot))
    return Walk(nodes[0], tuple(steps))


def parse_decomposition(text: str, G: Union[BidirectedGraph, UndirectedGraph]):
    lines = list(_lines(text))
    if not lines or lines[0][1] not in (["decomposition", "bidirected"], ["decomposition", "undirected"]):
        raise ParseError(lines[0][0] if lines else 1, "header must be 'decomposition <bidirected|undirected>'")
    undirected = lines[0][1][1] == "undirected"
    if undirected != isinstance(G, UndirectedGraph):
        raise ParseError(lines[0][0], "decomposition kind does not match the graph")
    base_nodes = base_edges = None
    steps: list[list] = []
    for no, toks in lines[1:]:
        if toks[0] == "base-nodes":
            base_nodes = [_int(t, no, G.node_count) for t in toks[1:]]
        elif toks[0] == "base-edges":
            base_edges = [_int(t, no) for t in toks[1:]]
            if any(not G.has_edge(e) for e in base_edges):
                raise ParseError(no, "base edge not in the graph")
        elif toks[0] == "step":
            if len(toks) != 2 or toks[1] not in ("single", "double"):
                raise ParseError(no, "step lines are 'step single' or 'step double'")
            steps.append([toks[1], no])
        elif toks[0] == "ear":
            if not steps:
                raise ParseError(no, "ear before any step")
            sec = _sections(toks[1:], no)
            if undirected:
                if "slots" in sec:
                    raise ParseError(no, "undirected ears carry no slots")
                steps[-1].append(OddEar(tuple(sec["nodes"]), tuple(sec["edges"])))
            else:
                steps[-1].append(_walk(G, sec, no))
        else:
            raise ParseError(no, f"unknown directive {toks[0]!r}")
    if base_nodes is None or base_edges is None:
        raise ParseError(lines[-1][0], "missing base-nodes or base-edges")
    for kind, no, *ears in steps:
        if len(ears) != (1 if kind == "single" else 2):
            raise ParseError(no, f"a {kind} step needs {1 if kind == 'single' else 2} ear lines")
    try:
        base = G.subgraph(base_nodes, base_edges)
    except GraphError as exc:
        raise ParseError(lines[0][0], str(exc)) from None
    if undirected:
        return MatchingEarDecomposition(base, tuple(MatchingEarStep(tuple(ears)) for _, _, *ears in steps))
    return EarDecomposition(base, tuple(EarStep(tuple(ears)) for _, _, *ears in steps))
