"""Strong connectivity of digraphs and bidirected graphs."""
from __future__ import annotations

from typing import Iterable

from .correspondence import project_in_host, to_skew
from .graph_core import BidirectedGraph, GraphError, Walk, underlying_connected
from .regular_reach import augment_with_terminals, find_regular_path
from .skew_core import DirectedWalk, SkewSymmetricGraph


def digraph_strongly_connected(g: BidirectedGraph) -> bool:
    if not g.is_all_standard():
        raise GraphError("digraph connectivity needs standard arcs only")
    if len(g.nodes) <= 1:
        return True
    fwd: dict[int, list[int]] = {x: [] for x in g.nodes}
    bwd: dict[int, list[int]] = {x: [] for x in g.nodes}
    for e in g.edges:
        t, h = (e.u, e.v) if e.su.value == "+" else (e.v, e.u)
        fwd[t].append(h)
        bwd[h].append(t)
    root = min(g.nodes)
    for adj in (fwd, bwd):
        seen = {root}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(g.nodes):
            return False
    return True


def _cycle_witness(sk: SkewSymmetricGraph, k: int) -> DirectedWalk | None:
    a, am = 2 * k, 2 * k + 1
    t, h = sk.arcs[a]
    aug, s = augment_with_terminals(sk, h, t)
    p = find_regular_path(aug, s, s + 1, exclude_arcs=(a, am))
    if p is None:
        return None
    # strip the terminal arcs: s -> h ... t -> s'
    inner = p.arcs[1:-1]
    if p.arcs[0] != sk.arc_count:
        # went through the mirrored side; take the mirror image of the inner path
        inner = tuple(sk.arc_mate[x] for x in reversed(inner))
    return DirectedWalk(t, (a,) + inner)


def cycle_through(g: BidirectedGraph, eid: int) -> Walk | None:
    """A cycle of ``g`` (edge-simple cyclic walk) through edge ``eid``, or None.

    The edge is turned into an arc pair of the skew-symmetric graph; after
    deleting both arcs, a regular path from the head back to the tail of one
    of them is searched for through the two-terminal gadget.
    """
    pos = next((k for k, e in enumerate(g.edges) if e.id == eid), None)
    if pos is None:
        raise GraphError(f"no edge with id {eid}")
    sk, _ = to_skew(g)
    w = _cycle_witness(sk, pos)
    if w is None:
        return None
    return project_in_host(g, w, cyclic=True)


def edge_in_cycle(g: BidirectedGraph, eid: int) -> bool:
    return cycle_through(g, eid) is not None


def edges_in_cycles(g: BidirectedGraph, eids: Iterable[int] | None = None) -> bool:
    """True iff every listed edge (default: all) lies on a cycle; stops at the first failure."""
    sk, _ = to_skew(g)
    pos = {e.id: k for k, e in enumerate(g.edges)}
    ids = [e.id for e in g.edges] if eids is None else list(eids)
    return all(_cycle_witness(sk, pos[i]) is not None for i in ids)


def bidirected_strongly_connected(g: BidirectedGraph) -> bool:
    return underlying_connected(g) and edges_in_cycles(g)
