"""Brute-force reference implementations used to cross-check the real algorithms.

Everything here enumerates.  None of it is fast and none of it shares code
with the searches it checks, beyond the graph containers.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence

from .graph_core import BidirectedGraph, Sign, Step, Walk
from .matching_ears import UndirectedGraph
from .skew_core import SkewSymmetricGraph
from .two_edges import Digraph


def naive_regular_path_exists(g: SkewSymmetricGraph, s: int, t: int) -> bool:
    """Enumerate arc-simple directed paths from ``s``; true if one ends at ``t`` without using an arc and its mate."""
    if s == t:
        return True
    used: set[int] = set()

    def rec(x: int) -> bool:
        for a in range(g.arc_count):
            if g.arcs[a][0] != x or a in used or g.arc_mate[a] in used:
                continue
            h = g.arcs[a][1]
            if h == t:
                return True
            used.add(a)
            hit = rec(h)
            used.discard(a)
            if hit:
                return True
        return False

    return rec(s)


def naive_regular_reachable(g: SkewSymmetricGraph, s: int) -> frozenset[int]:
    return frozenset(t for t in range(g.node_count) if naive_regular_path_exists(g, s, t))


def iter_cycles(g: BidirectedGraph) -> Iterator[Walk]:
    """Every edge-simple cyclic walk whose first edge has the smallest id on it, in both directions."""
    at: dict[int, list[tuple[int, int]]] = {}
    for e in g.edges:
        at.setdefault(e.u, []).append((e.id, 0))
        at.setdefault(e.v, []).append((e.id, 1))
    for first in g.edges:
        for slot0 in (0, 1):
            if first.is_loop and slot0 == 1:
                continue
            start, start_sign = first.end(slot0)
            steps = [Step(first.id, slot0)]
            used = {first.id}

            def rec(x: int, arrive: Sign) -> Iterator[Walk]:
                if x == start and arrive is not start_sign:
                    yield Walk(start, tuple(steps), cyclic=True)
                for eid, slot in at.get(x, ()):
                    if eid in used or eid < first.id:
                        continue
                    e = g.edge(eid)
                    if e.sign(slot) is arrive:
                        continue
                    y, ysign = e.end(1 - slot)
                    steps.append(Step(eid, slot))
                    used.add(eid)
                    yield from rec(y, ysign)
                    used.discard(eid)
                    steps.pop()

            y, ysign = first.end(1 - slot0)
            yield from rec(y, ysign)


def naive_edge_in_cycle(g: BidirectedGraph, eid: int) -> bool:
    return any(eid in c.edge_ids for c in iter_cycles(g))


def naive_strongly_connected(g: BidirectedGraph) -> bool:
    nodes = sorted(g.nodes)
    if len(nodes) > 1:
        adj: dict[int, set[int]] = {x: set() for x in nodes}
        for e in g.edges:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
        seen, stack = {nodes[0]}, [nodes[0]]
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(nodes):
            return False
    on_cycle: set[int] = set()
    for c in iter_cycles(g):
        on_cycle.update(c.edge_ids)
    return on_cycle == set(g.edge_ids)


def naive_collection_exists(D: Digraph, S: Sequence[int], T: Sequence[int]) -> bool:
    """Try every way of routing the sources one by one along arc-disjoint simple paths."""
    if len(S) != len(T):
        return False
    sources = sorted(S)

    def paths(x: int, used: set[int], seen: set[int]) -> Iterator[tuple[int, list[int]]]:
        yield x, []
        for a in D.out_arcs(x):
            h = D.head(a)
            if a in used or h in seen:
                continue
            seen.add(h)
            for end, rest in paths(h, used, seen):
                yield end, [a] + rest
            seen.discard(h)

    def rec(i: int, sinks: Counter, used: set[int]) -> bool:
        if i == len(sources):
            return True
        for end, arcs in paths(sources[i], used, {sources[i]}):
            if sinks[end] == 0:
                continue
            sinks[end] -= 1
            ok = rec(i + 1, sinks, used | set(arcs))
            sinks[end] += 1
            if ok:
                return True
        return False

    return rec(0, Counter(T), set())


def all_perfect_matchings(g: UndirectedGraph) -> list[frozenset[int]]:
    out: list[frozenset[int]] = []

    def rec(left: frozenset[int], acc: list[int]) -> None:
        if not left:
            out.append(frozenset(acc))
            return
        x = min(left)
        for e in g.edges:
            if e.u == e.v or x not in (e.u, e.v):
                continue
            y = e.other(x)
            if y in left:
                acc.append(e.id)
                rec(left - {x, y}, acc)
                acc.pop()

    if len(g.nodes) % 2 == 0:
        rec(frozenset(g.nodes), [])
    return out


def naive_matching_covered(g: UndirectedGraph) -> bool:
    if not g.edges or not g.is_connected():
        return False
    covered: set[int] = set()
    for m in all_perfect_matchings(g):
        covered |= m
    return covered == set(g.edge_ids)
