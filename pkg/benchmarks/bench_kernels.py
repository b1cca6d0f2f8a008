"""Time the regular-path search under the compiled and pure-Python kernels.

Usage: python3 benchmarks/bench_kernels.py [--graphs N] [--seed S]
"""
import argparse
import random
import time

from bidiears import kernel
from bidiears.correspondence import to_skew
from bidiears.generators import random_bidirected
from bidiears.regular_reach import find_regular_path, regular_reachable


def workload(graphs: int, seed: int):
    r = random.Random(seed)
    out = []
    for _ in range(graphs):
        n = r.randint(3, 8)
        out.append(to_skew(random_bidirected(r, n, r.randint(2 * n, 3 * n + 4)))[0])
    return out


def run(graphs) -> tuple[float, list]:
    t0 = time.perf_counter()
    answers = []
    for g in graphs:
        for s in range(g.node_count):
            answers.append(regular_reachable(g, s))
            p = find_regular_path(g, s, g.mate(s))
            answers.append(None if p is None else p.arcs)
    return time.perf_counter() - t0, answers


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    a = ap.parse_args()
    graphs = workload(a.graphs, a.seed)
    arcs = sum(g.arc_count for g in graphs)
    print(f"{len(graphs)} graphs, {arcs} arcs, backends available: {', '.join(sorted(kernel.BACKENDS))}")
    results = {}
    for name in sorted(kernel.BACKENDS):
        kernel.use_backend(name)
        best, answers = min((run(graphs) for _ in range(a.repeat)), key=lambda x: x[0])
        results[name] = (best, answers)
        print(f"{name:>9}: {best * 1000:8.1f} ms (best of {a.repeat})")
    if len(results) == 2:
        (tc, ac), (tp, ap_) = results["compiled"], results["python"]
        print(f"  speedup: {tp / tc:.1f}x, identical answers: {ac == ap_}")


if __name__ == "__main__":
    main()
