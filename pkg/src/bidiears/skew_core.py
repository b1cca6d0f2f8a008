"""Skew-symmetric digraphs: a node involution and an arc involution obeying the mate law."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph_core import GraphError, Verdict


def default_mates(node_count: int) -> tuple[int, ...]:
    return tuple(v ^ 1 for v in range(node_count))


@dataclass(frozen=True)
class SkewSymmetricGraph:
    """Digraph with symmetry.

    By convention nodes ``2k`` and ``2k + 1`` are mates unless ``node_mate``
    says otherwise.  Construction does not validate; use
    :func:`validate_symmetry`.
    """

    node_count: int
    arcs: tuple[tuple[int, int], ...]
    arc_mate: tuple[int, ...]
    node_mate: tuple[int, ...] = None  # type: ignore[assignment]
    _out: tuple = field(default=None, repr=False, compare=False, hash=False)  # type: ignore[assignment]
    _in: tuple = field(default=None, repr=False, compare=False, hash=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple((int(a), int(b)) for a, b in self.arcs))
        object.__setattr__(self, "arc_mate", tuple(self.arc_mate))
        if self.node_mate is None:
            object.__setattr__(self, "node_mate", default_mates(self.node_count))
        else:
            object.__setattr__(self, "node_mate", tuple(self.node_mate))
        if len(self.arc_mate) != len(self.arcs):
            raise GraphError("arc_mate must list one mate per arc")
        out: list[list[int]] = [[] for _ in range(self.node_count)]
        inc: list[list[int]] = [[] for _ in range(self.node_count)]
        for a, (t, h) in enumerate(self.arcs):
            if not (0 <= t < self.node_count and 0 <= h < self.node_count):
                raise GraphError(f"arc {a} references a node outside 0..{self.node_count - 1}")
            out[t].append(a)
            inc[h].append(a)
        object.__setattr__(self, "_out", tuple(tuple(x) for x in out))
        object.__setattr__(self, "_in", tuple(tuple(x) for x in inc))

    @classmethod
    def from_arc_pairs(cls, node_count: int, arcs: Iterable[tuple[int, int]],
                       node_mate: Sequence[int] | None = None) -> "SkewSymmetricGraph":
        """Each listed arc ``(u, v)`` is added together with its mate ``(v', u')``, as ids ``2i``, ``2i+1``."""
        mate = tuple(node_mate) if node_mate is not None else default_mates(node_count)
        flat: list[tuple[int, int]] = []
        amate: list[int] = []
        for i, (u, v) in enumerate(arcs):
            flat.extend([(u, v), (mate[v], mate[u])])
            amate.extend([2 * i + 1, 2 * i])
        return cls(node_count, tuple(flat), tuple(amate), mate)

    def mate(self, v: int) -> int:
        return self.node_mate[v]

    def tail(self, a: int) -> int:
        return self.arcs[a][0]

    def head(self, a: int) -> int:
        return self.arcs[a][1]

    def out_arcs(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_arcs(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def mate_set(self, nodes: Iterable[int]) -> frozenset[int]:
        return frozenset(self.node_mate[v] for v in nodes)

    def delta_in(self, nodes: Iterable[int]) -> list[int]:
        xs = set(nodes)
        return [a for a, (t, h) in enumerate(self.arcs) if h in xs and t not in xs]

    def delta_out(self, nodes: Iterable[int]) -> list[int]:
        xs = set(nodes)
        return [a for a, (t, h) in enumerate(self.arcs) if t in xs and h not in xs]

    def gamma(self, nodes: Iterable[int]) -> list[int]:
        xs = set(nodes)
        return [a for a, (t, h) in enumerate(self.arcs) if t in xs and h in xs]

    def without_arcs(self, drop: Iterable[int]) -> tuple["SkewSymmetricGraph", dict[int, int]]:
        """Delete a mate-closed arc set; returns the new graph and old→new arc ids."""
        drop = set(drop)
        if any(self.arc_mate[a] not in drop for a in drop):
            raise GraphError("deleted arc set must be closed under arc mates")
        keep = [a for a in range(self.arc_count) if a not in drop]
        remap = {a: i for i, a in enumerate(keep)}
        return SkewSymmetricGraph(
            self.node_count,
            tuple(self.arcs[a] for a in keep),
            tuple(remap[self.arc_mate[a]] for a in keep),
            self.node_mate,
        ), remap


@dataclass(frozen=True)
class DirectedWalk:
    start: int
    arcs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(self.arcs))

    def __len__(self) -> int:
        return len(self.arcs)

    def end(self, g: SkewSymmetricGraph) -> int:
        return g.head(self.arcs[-1]) if self.arcs else self.start

    def nodes(self, g: SkewSymmetricGraph) -> list[int]:
        return [self.start] + [g.head(a) for a in self.arcs]

    def is_valid(self, g: SkewSymmetricGraph) -> bool:
        if not 0 <= self.start < g.node_count:
            return False
        at = self.start
        for a in self.arcs:
            if not 0 <= a < g.arc_count or g.tail(a) != at:
                return False
            at = g.head(a)
        return True

    def is_arc_simple(self) -> bool:
        return len(set(self.arcs)) == len(self.arcs)

    def __add__(self, other: "DirectedWalk") -> "DirectedWalk":
        return DirectedWalk(self.start, self.arcs + other.arcs)


def mate_walk(g: SkewSymmetricGraph, p: DirectedWalk) -> DirectedWalk:
    """The symmetric walk: mates of the arcs, in reverse order, starting at the mate of ``p``'s end."""
    return DirectedWalk(g.mate(p.end(g)), tuple(g.arc_mate[a] for a in reversed(p.arcs)))


def is_regular(g: SkewSymmetricGraph, p: DirectedWalk) -> bool:
    """No two arcs of ``p`` are mates of each other (mate nodes may both appear)."""
    seen = set(p.arcs)
    return not any(g.arc_mate[a] in seen for a in p.arcs)


def validate_symmetry(g: SkewSymmetricGraph) -> Verdict:
    n = g.node_count
    if len(g.node_mate) != n:
        return Verdict.bad("node-mate-size", "node_mate has wrong length")
    for v in range(n):
        m = g.node_mate[v]
        if not 0 <= m < n:
            return Verdict.bad("node-mate-range", f"mate of {v} is {m}", v)
        if m == v:
            return Verdict.bad("fixed-point", f"σ_V({v}) = {v}", v)
        if g.node_mate[m] != v:
            return Verdict.bad("node-not-involution", f"σ_V(σ_V({v})) ≠ {v}", v)
    for a, (t, h) in enumerate(g.arcs):
        b = g.arc_mate[a]
        if not 0 <= b < g.arc_count:
            return Verdict.bad("arc-mate-range", f"mate of arc {a} is {b}", a)
        if b == a:
            return Verdict.bad("arc-fixed-point", f"arc {a} is its own mate", a)
        if g.arc_mate[b] != a:
            return Verdict.bad("arc-not-involution", f"σ_A(σ_A({a})) ≠ {a}", a)
        if g.arcs[b] != (g.node_mate[h], g.node_mate[t]):
            return Verdict.bad("mate-law", f"arc {a}=({t},{h}) has mate {b}={g.arcs[b]}", a)
    return Verdict.good()
