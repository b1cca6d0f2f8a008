"""Randomized agreement checks between the real algorithms and the brute-force oracles.

Each suite takes ``(max_size, count, seed)`` and returns the number of
agreeing queries and a list of human-readable disagreements.
"""
from __future__ import annotations

import random
from typing import Callable

from .connectivity import bidirected_strongly_connected
from .correspondence import to_skew
from .ear_decomp import decompose, verify_decomposition
from .generators import random_bidirected, random_ear_instance
from .matching_ears import UEdge, UndirectedGraph, find_perfect_matching, is_matching_covered
from .oracles import all_perfect_matchings, naive_collection_exists, naive_matching_covered, naive_regular_path_exists, naive_strongly_connected
from .regular_reach import find_barrier, find_regular_path, verify_barrier
from .two_edges import CutCertificate, Digraph, st_collection, validate_collection, verify_cut

Result = tuple[int, list[str]]


def regular_path_suite(max_size: int, count: int, seed: int) -> Result:
    """``max_size`` bounds the number of bidirected edges (arc mate pairs)."""
    r = random.Random(seed)
    agree, bad = 0, []
    for i in range(count):
        n = r.randint(1, max(1, max_size // 2 + 1))
        g = random_bidirected(r, n, r.randint(0, max_size))
        sk, _ = to_skew(g)
        for s in range(sk.node_count):
            for t in range(sk.node_count):
                fast = find_regular_path(sk, s, t) is not None
                if fast == naive_regular_path_exists(sk, s, t):
                    agree += 1
                else:
                    bad.append(f"instance {i} s={s} t={t} search={fast}")
    return agree, bad


def barrier_suite(max_size: int, count: int, seed: int) -> Result:
    r = random.Random(seed)
    agree, bad = 0, []
    for i in range(count):
        n = r.randint(1, min(5, max(1, max_size)))
        g = random_bidirected(r, n, r.randint(0, max_size))
        sk, _ = to_skew(g)
        for s in range(sk.node_count):
            B = find_barrier(sk, s)
            absent = find_regular_path(sk, s, sk.mate(s)) is None
            if (B is not None and bool(verify_barrier(sk, s, B))) == absent:
                agree += 1
            else:
                bad.append(f"instance {i} s={s} absent={absent} barrier={B is not None}")
    return agree, bad


def strong_suite(max_size: int, count: int, seed: int) -> Result:
    r = random.Random(seed)
    agree, bad = 0, []
    for i in range(count):
        n = r.randint(1, max(1, max_size // 2 + 1))
        g = random_bidirected(r, n, r.randint(0, max_size))
        fast = bidirected_strongly_connected(g)
        if fast == naive_strongly_connected(g):
            agree += 1
        else:
            bad.append(f"instance {i} search={fast}")
    return agree, bad


def collection_suite(max_size: int, count: int, seed: int) -> Result:
    r = random.Random(seed)
    agree, bad = 0, []
    for i in range(count):
        n = r.randint(1, max(1, max_size // 2 + 1))
        D = Digraph(n, tuple((r.randrange(n), r.randrange(n)) for _ in range(r.randint(0, max_size))))
        k = r.randint(1, 3)
        S = [r.randrange(n) for _ in range(k)]
        T = [r.randrange(n) for _ in range(k)]
        res = st_collection(D, S, T)
        if isinstance(res, CutCertificate):
            ok = verify_cut(D, res, S, T)
            fast = False
        else:
            ok = bool(validate_collection(D, res, S, T))
            fast = True
        if ok and fast == naive_collection_exists(D, S, T):
            agree += 1
        else:
            bad.append(f"instance {i} S={S} T={T} feasible={fast} certificate-valid={ok}")
    return agree, bad


def matching_suite(max_size: int, count: int, seed: int) -> Result:
    """``max_size`` bounds the node count."""
    r = random.Random(seed)
    agree, bad = 0, []
    for i in range(count):
        n = r.randint(1, max(1, max_size))
        m = r.randint(0, 2 * n)
        g = UndirectedGraph(n, tuple(UEdge(j, *r.sample(range(n), 2)) for j in range(m)) if n > 1 else ())
        pm = find_perfect_matching(g)
        fast = (pm is not None, is_matching_covered(g))
        slow = (bool(all_perfect_matchings(g)), naive_matching_covered(g))
        if fast == slow:
            agree += 1
        else:
            bad.append(f"instance {i} search={fast} enumeration={slow}")
    return agree, bad


def decompose_suite(max_size: int, count: int, seed: int) -> Result:
    """``max_size`` bounds the node count of G."""
    agree, bad = 0, []
    for i in range(count):
        inst = random_ear_instance(seed * 100_003 + i, max_nodes=max(2, max_size))
        v = verify_decomposition(inst.G, decompose(inst.G, inst.H))
        if v:
            agree += 1
        else:
            bad.append(f"instance {i}: {v.code} {v.message}")
    return agree, bad


SUITES: dict[str, Callable[[int, int, int], Result]] = {
    "regular-path": regular_path_suite,
    "barrier": barrier_suite,
    "strong": strong_suite,
    "collection": collection_suite,
    "matching": matching_suite,
    "decompose": decompose_suite,
}
