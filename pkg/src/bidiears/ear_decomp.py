"""Ears of bidirected graphs and ear decompositions built from single and double steps.

An ear of ``H`` with respect to ``G`` is an edge-simple walk of ``G`` whose two
ends lie in ``H``, whose inner nodes avoid ``H`` and which uses no edge of
``H``.  :func:`decompose` adds one ear per step when some ear keeps the
graph strongly connected and an edge-disjoint pair of ears otherwise.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .connectivity import bidirected_strongly_connected, digraph_strongly_connected, edges_in_cycles
from .correspondence import lift_in_host, to_skew
from .graph_core import BidirectedGraph, GraphError, Step, Verdict, Walk, is_edge_simple, validate_walk
from .regular_reach import Bud
from .skew_core import DirectedWalk
from .two_edges import Digraph, InvariantFailure, PathCollection, validate_collection

Ear = Walk


@dataclass(frozen=True)
class EarStep:
    ears: tuple[Walk, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ears", tuple(self.ears))

    @property
    def kind(self) -> str:
        return "single" if len(self.ears) == 1 else "double"

    def edge_count(self) -> int:
        return sum(len(e) for e in self.ears)


@dataclass(frozen=True)
class EarDecomposition:
    base: BidirectedGraph
    steps: tuple[EarStep, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))


class EarClass(enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"
    DELTA = "delta"
    EPSILON = "epsilon"


def verify_ear(G: BidirectedGraph, H: BidirectedGraph, ear: Walk) -> Verdict:
    """Check the three ear conditions; ``index`` 0 flags a malformed walk, 1..3 the condition."""
    if not ear.steps:
        return Verdict.bad("empty", "an ear needs at least one edge", 0)
    if ear.cyclic:
        return Verdict.bad("cyclic", "an ear is not a cyclic walk", 0)
    try:
        v = validate_walk(G, ear)
    except GraphError as exc:
        return Verdict.bad("walk", str(exc), 0)
    if not v:
        return Verdict.bad("walk", v.message, 0)
    if not is_edge_simple(ear):
        return Verdict.bad("not-a-path", "ear repeats an edge", 0)
    seq = ear.nodes(G)
    if seq[0] not in H.nodes or seq[-1] not in H.nodes:
        return Verdict.bad("ends", "an end of the ear is outside the host", 1)
    inner = [x for x in seq[1:-1] if x in H.nodes]
    if inner:
        return Verdict.bad("inner", f"inner node {inner[0]} lies in the host", 2)
    shared = [e for e in ear.edge_ids if H.has_edge(e)]
    if shared:
        return Verdict.bad("edges", f"edge {shared[0]} belongs to the host", 3)
    return Verdict.good()


def _union(G: BidirectedGraph, H: BidirectedGraph, ears: Iterable[Walk]) -> BidirectedGraph:
    nodes = set(H.nodes)
    ids = set(H.edge_ids)
    for ear in ears:
        nodes.update(ear.nodes(G))
        ids.update(ear.edge_ids)
    return G.subgraph(nodes, ids)


def add_ears(G: BidirectedGraph, H: BidirectedGraph, step: EarStep) -> BidirectedGraph:
    if len(step.ears) not in (1, 2):
        raise GraphError("a step adds one or two ears")
    for ear in step.ears:
        v = verify_ear(G, H, ear)
        if not v:
            raise GraphError(f"invalid ear: {v.message}")
    if len(step.ears) == 2 and set(step.ears[0].edge_ids) & set(step.ears[1].edge_ids):
        raise GraphError("the two ears share an edge")
    return _union(G, H, step.ears)


def extract_ears_from_cycle(G: BidirectedGraph, H: BidirectedGraph, C: Walk) -> list[Walk]:
    """Cut a cycle at its visits to ``H`` and drop its ``H``-edges; the remaining pieces are ears, in cyclic order."""
    if not validate_walk(G, C) or not C.cyclic or not is_edge_simple(C):
        raise GraphError("C must be a cycle of G")
    if all(H.has_edge(e) for e in C.edge_ids):
        return []
    seq = C.nodes(G)
    k = len(C.steps)
    cut = next((i for i in range(k) if seq[i] in H.nodes), None)
    if cut is None:
        raise GraphError("cycle never meets the host's nodes")
    rot = C.rotated(G, cut)
    ears: list[Walk] = []
    cur: list[Step] = []
    start = rot.start
    for st in rot.steps:
        cur.append(st)
        e = G.edge(st.edge)
        at = e.node(st.to_slot)
        if at in H.nodes:
            if not (len(cur) == 1 and H.has_edge(st.edge)):
                ears.append(Walk(start, tuple(cur)))
            cur = []
            start = at
    for ear in ears:
        if not verify_ear(G, H, ear):
            raise AssertionError("cycle piece is not an ear")
    return ears


def classify_ear(G: BidirectedGraph, H: BidirectedGraph, ear: Walk,
                 S: Iterable[int], buds: Iterable[Bud | Iterable[int]]) -> EarClass:
    """Class of an ear by where the ends of its skew-symmetric lift fall.

    ``S`` and the bud node sets are nodes of ``to_skew(G)``; the lift starts
    at ``u`` and ends at ``v``.
    """
    S = frozenset(S)
    Sm = frozenset(x ^ 1 for x in S)
    sets = [b.node_set if isinstance(b, Bud) else frozenset(b) for b in buds]
    sk, _ = to_skew(G)
    p = lift_in_host(G, ear)
    u, v = p.start, p.end(sk)
    in_bud = lambda x: any(x in b for b in sets)  # noqa: E731
    if u in Sm and v in S:
        return EarClass.ALPHA
    if u in S and v in Sm:
        return EarClass.BETA
    if u in S and in_bud(v):
        return EarClass.GAMMA
    if in_bud(u) and v in Sm:
        return EarClass.DELTA
    if in_bud(u) and in_bud(v):
        return EarClass.EPSILON
    raise GraphError(f"ear ends ({u}, {v}) match none of the five classes")


# ---------------------------------------------------------------- five nodes


def _bfs_path(D: Digraph, a: int, z: int) -> DirectedWalk | None:
    pred: dict[int, int | None] = {a: None}
    q = deque([a])
    while q:
        v = q.popleft()
        if v == z:
            break
        for arc_id in D.out_arcs(v):
            w = D.head(arc_id)
            if w not in pred:
                pred[w] = arc_id
                q.append(w)
    if z not in pred:
        return None
    arcs = []
    v = z
    while pred[v] is not None:
        arcs.append(pred[v])
        v = D.tail(pred[v])
    return DirectedWalk(a, tuple(reversed(arcs)))


def five_nodes(D: Digraph, a: int, b: int, x: int, y: int, z: int,
               coll: PathCollection) -> tuple[str, PathCollection]:
    """Turn an {a,b}–{x,y} collection into an {a,b}–{x,z} (tag ``"xz"``) or {a,b}–{z,y} (tag ``"zy"``) one.

    Takes an a–z path and walks it backwards from z until it reaches a or
    runs into an arc of one of the two given paths, then splices.
    """
    v = validate_collection(D, coll, (a, b), (x, y))
    if not v:
        raise GraphError(f"input is not an {{a,b}}-{{x,y}} collection: {v.message}")
    if len(coll.paths) != 2:
        raise GraphError("expected two paths")
    if not digraph_strongly_connected(D.to_bidirected()):
        raise GraphError("D is not strongly connected")
    if z == y:
        return "xz", coll
    if z == x:
        return "zy", coll
    p0, p1 = coll.paths
    swapped = False
    for P, Q in ((p0, p1), (p1, p0)):
        if P.start == a and Q.start == b:
            if P.end(D) == x:
                break
            if P.end(D) == y and Q.end(D) == x:
                swapped = True
                break
    else:  # pragma: no cover - validate_collection rules this out
        raise GraphError("paths do not match the terminals")
    if swapped:
        x, y = y, x
    R = _bfs_path(D, a, z)
    assert R is not None, "strong connectivity guarantees an a-z path"
    in_P, in_Q = set(P.arcs), set(Q.arcs)
    tail_arcs: list[int] = []
    tag = "zy"
    pair: tuple[DirectedWalk, DirectedWalk] = (Q, R)
    for arc_id in reversed(R.arcs):
        if arc_id in in_P:
            k = P.arcs.index(arc_id)
            pair = (Q, DirectedWalk(a, P.arcs[:k + 1] + tuple(reversed(tail_arcs))))
            tag = "zy"
            break
        if arc_id in in_Q:
            k = Q.arcs.index(arc_id)
            pair = (P, DirectedWalk(b, Q.arcs[:k + 1] + tuple(reversed(tail_arcs))))
            tag = "xz"
            break
        tail_arcs.append(arc_id)
    if swapped:
        tag = "xz" if tag == "zy" else "zy"
        x, y = y, x
    sinks = (x, z) if tag == "xz" else (z, y)
    out = PathCollection(tuple(sorted(pair, key=lambda p: (p.start, p.arcs))), tuple(sorted((a, b))), tuple(sorted(sinks)))
    assert validate_collection(D, out, (a, b), sinks), "spliced collection is invalid"
    return tag, out


# ---------------------------------------------------------------- search


def _canonical(G: BidirectedGraph, w: Walk) -> Walk:
    r = w.reversed(G)
    kw = (w.edge_ids, tuple(s.slot for s in w.steps))
    kr = (r.edge_ids, tuple(s.slot for s in r.steps))
    return w if kw <= kr else r


def _ears_of_length(G: BidirectedGraph, H: BidirectedGraph, length: int) -> list[Walk]:
    free = [e for e in G.edges if not H.has_edge(e.id)]
    at: dict[int, list[tuple[int, int]]] = {}
    for e in free:
        at.setdefault(e.u, []).append((e.id, 0))
        at.setdefault(e.v, []).append((e.id, 1))
    found: dict[tuple, Walk] = {}
    steps: list[Step] = []
    used: set[int] = set()

    def extend(x: int, arrive_sign) -> None:
        for eid, slot in at.get(x, ()):
            if eid in used:
                continue
            e = G.edge(eid)
            if arrive_sign is not None and e.sign(slot) is arrive_sign:
                continue
            y, ysign = e.end(1 - slot)
            steps.append(Step(eid, slot))
            if y in H.nodes:
                if len(steps) == length:
                    w = _canonical(G, Walk(start, tuple(steps)))
                    found.setdefault((w.start, w.steps), w)
            elif len(steps) < length:
                used.add(eid)
                extend(y, ysign)
                used.discard(eid)
            steps.pop()

    for start in sorted(H.nodes):
        extend(start, None)
    return sorted(found.values(), key=lambda w: (w.edge_ids, tuple(s.slot for s in w.steps)))


def iter_ears(G: BidirectedGraph, H: BidirectedGraph) -> Iterator[Walk]:
    """Every ear of ``H`` w.r.t. ``G`` once (up to reversal): shortest first, then by edge ids."""
    free = len(G.edges) - len(H.edges)
    for length in range(1, free + 1):
        yield from _ears_of_length(G, H, length)


def _adds_strongly(G: BidirectedGraph, H: BidirectedGraph, ears: Iterable[Walk], check: Iterable[int]) -> bool:
    return edges_in_cycles(_union(G, H, ears), check)


def _check_pre(G: BidirectedGraph, H: BidirectedGraph) -> None:
    if not H.is_subgraph_of(G):
        raise GraphError("H is not a subgraph of G")
    if H.edge_ids == G.edge_ids and H.nodes == G.nodes:
        raise GraphError("H equals G; nothing to add")


def try_single_ear(G: BidirectedGraph, H: BidirectedGraph) -> Walk | None:
    """First ear (in :func:`iter_ears` order) whose addition keeps ``H`` strongly connected.

    ``H`` is assumed strongly connected, so only the new edges need a cycle.
    """
    _check_pre(G, H)
    for ear in iter_ears(G, H):
        if _adds_strongly(G, H, (ear,), ear.edge_ids):
            return ear
    return None


def try_double_ear(G: BidirectedGraph, H: BidirectedGraph) -> EarStep | None:
    """First edge-disjoint pair of ears whose joint addition keeps ``H`` strongly connected."""
    _check_pre(G, H)
    pool = list(iter_ears(G, H))
    # edges already on a cycle after adding one ear stay on one after adding a second
    lonely: dict[int, list[int]] = {}

    def stuck(i: int) -> list[int]:
        if i not in lonely:
            ear = pool[i]
            U = _union(G, H, (ear,))
            lonely[i] = [e for e in ear.edge_ids if not edges_in_cycles(U, (e,))]
        return lonely[i]

    for i, j in combinations(range(len(pool)), 2):
        if set(pool[i].edge_ids) & set(pool[j].edge_ids):
            continue
        if _adds_strongly(G, H, (pool[i], pool[j]), stuck(i) + stuck(j)):
            return EarStep((pool[i], pool[j]))
    return None


def _same_graph(A: BidirectedGraph, B: BidirectedGraph) -> bool:
    return A.nodes == B.nodes and A.edge_ids == B.edge_ids


def decompose(G: BidirectedGraph, H: BidirectedGraph) -> EarDecomposition:
    """Grow ``H`` to ``G`` greedily, preferring single-ear steps."""
    if not H.is_subgraph_of(G):
        raise GraphError("H is not a subgraph of G")
    if not bidirected_strongly_connected(G):
        raise GraphError("G is not strongly connected")
    if not bidirected_strongly_connected(H):
        raise GraphError("H is not strongly connected")
    cur = H
    steps: list[EarStep] = []
    while not _same_graph(cur, G):
        ear = try_single_ear(G, cur)
        if ear is not None:
            step = EarStep((ear,))
        else:
            step = try_double_ear(G, cur)
            if step is None:
                raise InvariantFailure("no single or double ear step keeps H strongly connected")
        cur = add_ears(G, cur, step)
        steps.append(step)
    return EarDecomposition(H, tuple(steps))


def verify_decomposition(G: BidirectedGraph, d: EarDecomposition) -> Verdict:
    """Replay ``d``; ``index`` is the failing step (-1 for the base, ``len(steps)`` for the final check)."""
    if not d.base.is_subgraph_of(G):
        return Verdict.bad("base", "base is not a subgraph of G", -1)
    if not bidirected_strongly_connected(d.base):
        return Verdict.bad("base", "base is not strongly connected", -1)
    cur = d.base
    for i, step in enumerate(d.steps):
        if len(step.ears) not in (1, 2):
            return Verdict.bad("step-size", "a step adds one or two ears", i)
        for ear in step.ears:
            v = verify_ear(G, cur, ear)
            if not v:
                return Verdict.bad("ear", v.message, i)
        if len(step.ears) == 2 and set(step.ears[0].edge_ids) & set(step.ears[1].edge_ids):
            return Verdict.bad("pair-overlap", "ears of a double step share an edge", i)
        cur = _union(G, cur, step.ears)
        if not bidirected_strongly_connected(cur):
            return Verdict.bad("not-strong", "graph after this step is not strongly connected", i)
    if not _same_graph(cur, G):
        return Verdict.bad("final", "decomposition does not end at G", len(d.steps))
    return Verdict.good()
