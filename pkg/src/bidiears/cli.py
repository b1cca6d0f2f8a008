"""Command line interface.

Exit codes: 0 affirmative, 1 negative verdict, 2 usage or parse error,
3 internal invariant failure.  Verdict lines start with ``OK:``, ``FAIL:`` or
``ABSENT:``.
"""
from __future__ import annotations

import argparse
import random
import sys
import traceback
from pathlib import Path
from typing import Callable, Sequence

from .connectivity import edges_in_cycles
from .correspondence import to_skew
from .ear_decomp import decompose, verify_decomposition
from .fileio import GraphFile, ParseError, emit_decomposition, emit_graph, match_subgraph, parse_decomposition, parse_graph
from .generators import (GenerationError, ear_deleted_subgraph, random_bidirected, random_matching_covered,
                         random_strong_bidirected, random_strong_digraph)
from .graph_core import BidirectedGraph, GraphError, underlying_connected
from .matching_ears import (UndirectedGraph, is_elastic, is_matching_covered, matching_decompose,
                            verify_matching_decomposition)
from .regular_reach import (ScaleGuardError, augment_with_terminals, find_barrier, find_regular_path,
                            verify_barrier)
from .two_edges import InvariantFailure, two_edges


class UsageError(Exception):
    pass


def _read_graph(path: str) -> GraphFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text)


def _bidirected(path: str) -> BidirectedGraph:
    gf = _read_graph(path)
    if gf.kind == "undirected":
        raise UsageError(f"{path}: expected a bidirected or digraph file")
    return gf.graph


def _undirected(path: str) -> UndirectedGraph:
    gf = _read_graph(path)
    if gf.kind != "undirected":
        raise UsageError(f"{path}: expected an undirected file")
    return gf.graph


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _ids(xs) -> str:
    return " ".join(map(str, xs)) if xs else "-"


# ---------------------------------------------------------------- commands


def cmd_check_strong(a) -> int:
    g = _bidirected(a.file)
    if not underlying_connected(g):
        print("FAIL: not-strong underlying graph is disconnected")
        return 1
    for e in g.edges:
        if not edges_in_cycles(g, (e.id,)):
            print(f"FAIL: not-strong edge {e.id} lies on no cycle")
            return 1
    print("OK: strongly connected")
    return 0


def _print_barrier(B) -> None:
    print(f"S {_ids(sorted(B.S))}")
    print(f"M {_ids(sorted(B.M))}")
    for b in B.buds:
        print(f"bud base-arc {b.base_arc} nodes {_ids(sorted(b.node_set))}")


def cmd_regular_path(a) -> int:
    g = _bidirected(a.file)
    sk, _ = to_skew(g)
    for x in (a.s, a.t):
        if not 0 <= x < sk.node_count:
            raise UsageError(f"node {x} out of range (skew-symmetric nodes are 0..{sk.node_count - 1})")
    p = find_regular_path(sk, a.s, a.t)
    if p is not None:
        print(f"OK: regular path nodes {_ids(p.nodes(sk))} arcs {_ids(p.arcs)}")
        return 0
    print(f"ABSENT: no regular path from {a.s} to {a.t}")
    if a.certificate:
        if a.t == sk.mate(a.s):
            host, src = sk, a.s
        else:
            host, src = augment_with_terminals(sk, a.s, a.t)
            print(f"certificate graph adds terminals {src} {src + 1} with arcs {_ids(range(sk.arc_count, host.arc_count))}")
        B = find_barrier(host, src)
        if B is None or not verify_barrier(host, src, B):
            print("FAIL: invariant no verified barrier for an absent regular path", file=sys.stderr)
            return 3
        print("OK: barrier verified")
        _print_barrier(B)
    return 1


def cmd_barrier(a) -> int:
    g = _bidirected(a.file)
    sk, _ = to_skew(g)
    if not 0 <= a.s < sk.node_count:
        raise UsageError(f"node {a.s} out of range")
    B = find_barrier(sk, a.s)
    if B is None:
        p = find_regular_path(sk, a.s, sk.mate(a.s))
        print(f"ABSENT: no barrier; regular path arcs {_ids(p.arcs) if p else '?'}")
        return 1
    v = verify_barrier(sk, a.s, B)
    if not v:
        print(f"FAIL: invariant barrier rejected: {v.message}", file=sys.stderr)
        return 3
    print("OK: barrier verified")
    _print_barrier(B)
    return 0


def cmd_decompose(a) -> int:
    G = _bidirected(a.g_file)
    H = match_subgraph(G, _bidirected(a.h_file))
    d = decompose(G, H)
    _write(emit_decomposition(d, G), a.output)
    return 0


def cmd_verify(a) -> int:
    gf = _read_graph(a.g_file)
    try:
        text = Path(a.decomposition).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {a.decomposition}: {exc.strerror}") from None
    d = parse_decomposition(text, gf.graph)
    if gf.kind == "undirected":
        v = verify_matching_decomposition(gf.graph, d)
    else:
        v = verify_decomposition(gf.graph, d)
    if v:
        print(f"OK: valid decomposition with {len(d.steps)} steps")
        return 0
    print(f"FAIL: {v.code} step {v.index}: {v.message}")
    return 1


def cmd_two_edges(a) -> int:
    D = _bidirected(a.g_file)
    E = _bidirected(a.e_file)
    if E.node_count != D.node_count:
        raise UsageError("edge file has a different node count")
    extra = [e.with_id(len(D.edges) + i) for i, e in enumerate(E.edges)]
    e1, e2 = two_edges(D, extra)
    print(f"OK: pair {e1.id - len(D.edges)} {e2.id - len(D.edges)}")
    for e in (e1, e2):
        print(f"edge {e.u} {e.v} {e.su.value} {e.sv.value}")
    return 0


def cmd_matching_decompose(a) -> int:
    g = _undirected(a.g_file)
    h = match_subgraph(g, _undirected(a.h_file))
    _write(emit_decomposition(matching_decompose(g, h)), a.output)
    return 0


def cmd_gen_random(a) -> int:
    r = random.Random(a.seed)
    n, m = a.nodes, a.edges
    if n < 1 or m < 0:
        raise UsageError("need --nodes >= 1 and --edges >= 0")
    sub = None
    if a.kind == "bidirected":
        g = random_strong_bidirected(r, n, m)
        sub = ear_deleted_subgraph(r, g, r.randint(1, max(1, m)))
    elif a.kind == "digraph":
        g = random_strong_digraph(r, n, max(m, n))
        sub = ear_deleted_subgraph(r, g, r.randint(1, max(1, m)))
    elif a.kind == "skew":
        g = random_bidirected(r, n, m)
    else:
        if n % 2:
            raise UsageError("matching covered graphs need an even --nodes")
        g = random_matching_covered(r, n)
        sub = next((h for h in (g.subgraph((e.u, e.v), (e.id,)) for e in g.edges)
                    if is_matching_covered(h) and is_elastic(g, h)), g)
    text = emit_graph(g, "digraph" if a.kind == "digraph" else None)
    if a.kind == "skew":
        text = "# skew-symmetric graph stored in bidirected form; node x stands for the mate pair 2x, 2x+1\n" + text
    _write(text, a.output)
    if a.subgraph_output:
        if sub is None:
            raise UsageError(f"--subgraph-output is not available for --kind {a.kind}")
        Path(a.subgraph_output).write_text(emit_graph(sub, "digraph" if a.kind == "digraph" else None),
                                           encoding="utf-8")
    return 0


def cmd_oracle_check(a) -> int:
    from .oracle_suites import SUITES

    if a.suite not in SUITES:
        raise UsageError(f"unknown suite {a.suite!r}; choose from {', '.join(sorted(SUITES))}")
    agree, disagree = SUITES[a.suite](a.max_size, a.count, a.seed)
    tag = "OK" if not disagree else "FAIL"
    print(f"{tag}: suite {a.suite} agreements {agree} disagreements {len(disagree)}")
    for line in disagree[:10]:
        print(f"disagreement {line}")
    return 0 if not disagree else 1


# ---------------------------------------------------------------- plumbing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bidiears", description="Ear decompositions of bidirected graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("check-strong", cmd_check_strong, "strong connectivity verdict")
    sp.add_argument("file")
    sp = add("regular-path", cmd_regular_path, "regular path between skew-symmetric nodes")
    sp.add_argument("file")
    sp.add_argument("s", type=int)
    sp.add_argument("t", type=int)
    sp.add_argument("--certificate", action="store_true", help="print a verified barrier when absent")
    sp = add("barrier", cmd_barrier, "find and verify an s-barrier")
    sp.add_argument("file")
    sp.add_argument("s", type=int)
    sp = add("decompose", cmd_decompose, "ear decomposition of G starting from H")
    sp.add_argument("g_file")
    sp.add_argument("h_file")
    sp.add_argument("-o", "--output")
    sp = add("verify", cmd_verify, "replay a decomposition file against G")
    sp.add_argument("g_file")
    sp.add_argument("decomposition")
    sp = add("two-edges", cmd_two_edges, "pick two nonstandard edges keeping D strongly connected")
    sp.add_argument("g_file")
    sp.add_argument("e_file")
    sp = add("matching-decompose", cmd_matching_decompose, "odd-ear decomposition of a matching covered graph")
    sp.add_argument("g_file")
    sp.add_argument("h_file")
    sp.add_argument("-o", "--output")
    sp = add("gen-random", cmd_gen_random, "seeded random instance")
    sp.add_argument("--kind", choices=("bidirected", "digraph", "skew", "matching-covered"), default="bidirected")
    sp.add_argument("--nodes", type=int, default=5)
    sp.add_argument("--edges", type=int, default=8)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output")
    sp.add_argument("--subgraph-output", help="also write a valid starting subgraph here")
    sp = add("oracle-check", cmd_oracle_check, "cross-check against brute force")
    sp.add_argument("suite")
    sp.add_argument("--max-size", type=int, default=6)
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return a.fn(a)
    except (UsageError, ScaleGuardError) as exc:
        print(f"FAIL: usage {exc}", file=sys.stderr)
        return 2
    except InvariantFailure as exc:
        print(f"FAIL: invariant {exc}", file=sys.stderr)
        traceback.print_exc(file=sys.stderr)
        return 3
    except GraphError as exc:
        if isinstance(exc, ParseError):
            print(f"FAIL: parse {exc}", file=sys.stderr)
            return 2
        print(f"FAIL: precondition {exc}")
        return 1
    except GenerationError as exc:
        print(f"FAIL: generator {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
