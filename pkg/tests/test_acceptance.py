"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) or through pytest; either
way the verdict lines are printed.
"""
import itertools
import math
import random
import subprocess
import sys
import time
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from acceptance_report import report  # noqa: E402
from bidiears.cli import main  # noqa: E402
from bidiears.connectivity import bidirected_strongly_connected  # noqa: E402
from bidiears.correspondence import lift_walk, map_walk_tau, to_bidirected, to_skew  # noqa: E402
from bidiears.ear_decomp import (add_ears, decompose, five_nodes, try_double_ear, try_single_ear,  # noqa: E402
                                 verify_decomposition)
from bidiears.generators import (random_bidirected, random_ear_instance, random_matching_instance,  # noqa: E402
                                 random_strong_digraph, random_two_edge_instance)
from bidiears.graph_core import Sign  # noqa: E402
from bidiears.matching_ears import (is_elastic, matching_decompose, verify_matching_decomposition)  # noqa: E402
from bidiears.oracles import (iter_cycles, naive_collection_exists, naive_matching_covered,  # noqa: E402
                              naive_regular_path_exists)
from bidiears.regular_reach import find_barrier, find_regular_path, verify_barrier  # noqa: E402
from bidiears.skew_core import SkewSymmetricGraph, is_regular  # noqa: E402
from bidiears.two_edges import (Digraph, PathCollection, cut_phi, in_family_f1, is_crossing,  # noqa: E402
                                st_collection, two_edges, validate_collection, verify_cut)
from helpers import four_node_chord_instance, k4, random_valid_walk  # noqa: E402

# ---------------------------------------------------------------- the small-graph corpus

PAIRS = 3
MAX_ARC_PAIRS = 6


def _norm(arc):
    u, v = arc
    return min(arc, (v ^ 1, u ^ 1))


def _symmetries(pairs):
    """Relabelings that commute with the mate map: permute node pairs, swap inside pairs."""
    out = []
    for perm in itertools.permutations(range(pairs)):
        for flips in itertools.product((0, 1), repeat=pairs):
            out.append([2 * perm[x // 2] + ((x & 1) ^ flips[x // 2]) for x in range(2 * pairs)])
    return out


@lru_cache(maxsize=None)
def corpus():
    """One representative per relabeling class of every skew-symmetric graph on 3 mate pairs
    of nodes with at most 6 mate pairs of arcs, as (representative, class size)."""
    n = 2 * PAIRS
    types = sorted({_norm((u, v)) for u in range(n) for v in range(n)})
    syms = _symmetries(PAIRS)

    def images(ms):
        return {tuple(sorted(_norm((s[u], s[v])) for u, v in ms)) for s in syms}

    level, reps = {()}, [()]
    for _ in range(MAX_ARC_PAIRS):
        level = {min(images(rep + (t,))) for rep in level for t in types}
        reps.extend(sorted(level))
    return types, [(rep, len(images(rep))) for rep in reps]


def corpus_graphs():
    _, reps = corpus()
    return [SkewSymmetricGraph.from_arc_pairs(2 * PAIRS, list(rep)) for rep, _ in reps]


@lru_cache(maxsize=None)
def random_corpus():
    r = random.Random(2024)
    out = []
    for _ in range(500):
        bg = random_bidirected(r, r.randint(1, 5), r.randint(0, 8))
        out.append(to_skew(bg)[0])
    return out


# ---------------------------------------------------------------- criteria


def test_criterion_1_correspondence_round_trip():
    t0 = time.perf_counter()
    r = random.Random(1)
    graph_fail = walk_fail = walks = 0
    for _ in range(1000):
        g = random_bidirected(r, r.randint(1, 10), r.randint(0, 20))
        sk, pi = to_skew(g)
        if to_bidirected(sk, pi).canonical() != g.canonical():
            graph_fail += 1
    while walks < 1000:
        g = random_bidirected(r, r.randint(1, 6), r.randint(1, 12))
        sk, pi = to_skew(g)
        w = random_valid_walk(r, g, r.randint(0, 8))
        p = lift_walk(sk, pi, w)
        walks += 1
        if not (is_regular(sk, p) and map_walk_tau(sk, pi, p) == w and lift_walk(sk, pi, map_walk_tau(sk, pi, p)) == p):
            walk_fail += 1
    dt = time.perf_counter() - t0
    ok = graph_fail == 0 and walk_fail == 0 and dt < 30
    report(1, ok, f"1000 graphs, {walks} walks, failures {graph_fail}+{walk_fail}, {dt:.1f}s (limit 30s)")
    assert ok


def test_criterion_2_regular_reach_oracle():
    types, reps = corpus()
    total = sum(size for _, size in reps)
    expected = math.comb(len(types) + MAX_ARC_PAIRS, MAX_ARC_PAIRS)
    queries = bad = 0
    for g in corpus_graphs() + random_corpus():
        for s in range(g.node_count):
            for t in range(g.node_count):
                queries += 1
                if (find_regular_path(g, s, t) is not None) != naive_regular_path_exists(g, s, t):
                    bad += 1
    ok = bad == 0 and total == expected
    report(2, ok, f"{len(reps)} class representatives covering {total}/{expected} corpus graphs + 500 random, "
                  f"{queries} queries, {queries - bad} agree")
    assert ok


def test_criterion_3_barrier_certificates():
    graphs = corpus_graphs() + [g for g in random_corpus() if g.node_count <= 10]
    checked = bad = 0
    for g in graphs:
        for s in range(g.node_count):
            checked += 1
            B = find_barrier(g, s)
            certified = B is not None and bool(verify_barrier(g, s, B))
            if certified != (find_regular_path(g, s, g.mate(s)) is None):
                bad += 1
    report(3, bad == 0, f"{len(graphs)} graphs, {checked} sources, {bad} mismatches")
    assert bad == 0


def test_criterion_4_decomposition():
    t0 = time.perf_counter()
    bad = doubles = 0
    for seed in range(500):
        inst = random_ear_instance(seed, max_nodes=8, max_edges=18)
        assert inst.H.is_subgraph_of(inst.G)
        assert bidirected_strongly_connected(inst.G) and bidirected_strongly_connected(inst.H)
        d = decompose(inst.G, inst.H)
        doubles += sum(s.kind == "double" for s in d.steps)
        if not verify_decomposition(inst.G, d):
            bad += 1
    dt = time.perf_counter() - t0
    ok = bad == 0 and dt < 300
    report(4, ok, f"500 instances, {bad} failures, {doubles} double steps, {dt:.1f}s (limit 300s)")
    assert ok


def test_criterion_5_two_edges_and_parity():
    bad = cycles = parity_bad = 0
    for seed in range(200):
        inst = random_two_edge_instance(seed, max_nodes=8, max_arcs=12, max_extra=6)
        e1, e2 = two_edges(inst.D, inst.E)
        if not bidirected_strongly_connected(inst.D.with_edges((e1, e2))):
            bad += 1
        entering = {e.id for e in inst.E if e.su is Sign.IN}
        leaving = {e.id for e in inst.E if e.su is Sign.OUT}
        for C in iter_cycles(inst.D.with_edges(inst.E)):
            cycles += 1
            if sum(e in entering for e in C.edge_ids) != sum(e in leaving for e in C.edge_ids):
                parity_bad += 1
    ok = bad == 0 and parity_bad == 0
    report(5, ok, f"200 instances, {bad} failures; {cycles} cycles, {parity_bad} parity violations")
    assert ok


def test_criterion_6_digraph_specialization():
    bad = 0
    for seed in range(200):
        inst = random_ear_instance(10_000 + seed, max_nodes=8, max_edges=18, standard_only=True)
        d = decompose(inst.G, inst.H)
        singles = all(s.kind == "single" for s in d.steps)
        added = sum(s.edge_count() for s in d.steps)
        if not (singles and added == len(inst.G.edges) - len(inst.H.edges) and verify_decomposition(inst.G, d)):
            bad += 1
    report(6, bad == 0, f"200 standard instances, {bad} with a double step or wrong edge count")
    assert bad == 0


def test_criterion_7_double_ear_regressions():
    G, H = four_node_chord_instance()
    chords_ok = (try_single_ear(G, H) is None and try_double_ear(G, H) is not None
              and [s.kind for s in decompose(G, H).steps] == ["double"])
    g = k4()
    h = g.subgraph(range(4), [e.id for e in g.edges if {e.u, e.v} in ({0, 1}, {1, 2}, {2, 3}, {0, 3})])
    d = matching_decompose(g, h)
    k4_ok = [s.kind for s in d.steps] == ["double"] and bool(verify_matching_decomposition(g, d))
    # single odd ears from C4 into K4 are the two chords; neither alone keeps matching coverage
    for e in (4, 5):
        k4_ok &= not naive_matching_covered(g.subgraph(range(4), h.edge_ids | {e}))
    ok = chords_ok and k4_ok
    report(7, ok, f"four-node bidirected instance {'double' if chords_ok else 'NOT double'}, "
                  f"K4 from C4 {'double' if k4_ok else 'NOT double'}")
    assert ok


def test_criterion_8_matching_decomposition():
    bad = 0
    for seed in range(100):
        inst = random_matching_instance(seed, max_nodes=12)
        if not (naive_matching_covered(inst.g) and naive_matching_covered(inst.h) and is_elastic(inst.g, inst.h)):
            bad += 1
            continue
        if not verify_matching_decomposition(inst.g, matching_decompose(inst.g, inst.h)):
            bad += 1
    report(8, bad == 0, f"100 instances, {bad} failures")
    assert bad == 0


def test_criterion_9_primitives():
    r = random.Random(9)
    sub_bad = 0
    for _ in range(500):
        n = r.randint(2, 8)
        D = Digraph(n, tuple((r.randrange(n), r.randrange(n)) for _ in range(r.randint(0, 16))))
        X = {x for x in range(n) if r.random() < 0.5}
        Y = {x for x in range(n) if r.random() < 0.5}
        if cut_phi(D, X) + cut_phi(D, Y) < cut_phi(D, X & Y) + cut_phi(D, X | Y):
            sub_bad += 1
    crossing = cross_bad = 0
    while crossing < 200:
        n = r.randint(3, 7)
        D = Digraph.from_bidirected(random_strong_digraph(r, n, r.randint(n, 2 * n)))
        fam = [set(X) for k in range(1, n) for X in itertools.combinations(range(n), k) if in_family_f1(D, X)]
        for X, Y in itertools.combinations(fam, 2):
            if is_crossing(n, X, Y) and crossing < 200:
                crossing += 1
                if not (in_family_f1(D, X & Y) and in_family_f1(D, X | Y)):
                    cross_bad += 1
    coll_bad = 0
    for _ in range(300):
        n = r.randint(1, 6)
        D = Digraph(n, tuple((r.randrange(n), r.randrange(n)) for _ in range(r.randint(0, 12))))
        k = r.randint(1, 3)
        S = [r.randrange(n) for _ in range(k)]
        T = [r.randrange(n) for _ in range(k)]
        res = st_collection(D, S, T)
        feasible = isinstance(res, PathCollection)
        valid = bool(validate_collection(D, res, S, T)) if feasible else verify_cut(D, res, S, T)
        if not valid or feasible != naive_collection_exists(D, S, T):
            coll_bad += 1
    five = five_bad = 0
    while five < 300:
        n = r.randint(2, 8)
        D = Digraph.from_bidirected(random_strong_digraph(r, n, r.randint(n, 2 * n + 2)))
        a, b, x, y, z = (r.randrange(n) for _ in range(5))
        coll = st_collection(D, (a, b), (x, y))
        if not isinstance(coll, PathCollection):
            continue
        five += 1
        tag, out = five_nodes(D, a, b, x, y, z, coll)
        if not validate_collection(D, out, (a, b), (x, z) if tag == "xz" else (z, y)):
            five_bad += 1
    ok = not (sub_bad or cross_bad or coll_bad or five_bad)
    report(9, ok, f"submodularity 500 ({sub_bad} bad), crossing 200 ({cross_bad} bad), "
                  f"collections 300 ({coll_bad} bad), five-node splices 300 ({five_bad} bad)")
    assert ok


def test_criterion_10_cli_contract(tmp_path):
    bad = runs = nondet = 0
    for kind in ("bidirected", "digraph"):
        for seed in range(15):
            g, h, d = (tmp_path / f"{kind}{seed}{s}" for s in ("g", "h", "d"))
            gen = ["gen-random", "--kind", kind, "--nodes", "6", "--edges", "10", "--seed", str(seed)]
            runs += 1
            if main(gen + ["-o", str(g), "--subgraph-output", str(h)]) != 0:
                bad += 1
                continue
            if main(["decompose", str(g), str(h), "-o", str(d)]) != 0 or main(["verify", str(g), str(d)]) != 0:
                bad += 1
    for kind in ("bidirected", "digraph", "skew", "matching-covered"):
        for seed in range(5):
            argv = [sys.executable, "-m", "bidiears", "gen-random", "--kind", kind, "--nodes", "6",
                    "--edges", "9", "--seed", str(seed)]
            a = subprocess.run(argv, capture_output=True, check=True).stdout
            b = subprocess.run(argv, capture_output=True, check=True).stdout
            nondet += a != b
    ok = bad == 0 and nondet == 0
    report(10, ok, f"{runs} generate/decompose/verify pipelines, {bad} nonzero exits; "
                   f"20 generator seeds, {nondet} differing outputs")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
