"""Time the numba kernels against their pure numpy / Python twins.

    python benchmarks/bench_kernels.py [--repeat 3] [--seed 0]

Each workload is run once through both implementations to check that they
agree, then timed (best of ``--repeat``). The compiled side is warmed up
first so compilation is not counted.
"""

import argparse
import random
import time

import numpy as np

from tournaments.catalog import build_named
from tournaments.core import from_orientation, labelled_codes, refined_cells
from tournaments.kernels import jit, ref
from tournaments.landscape import enumerate_classes


def random_tournament(n, rng):
    return from_orientation(n, "".join(rng.choice("01") for _ in range(n * (n - 1) // 2)))


def workloads(rng):
    classes7 = enumerate_classes(7)
    canon_args = []
    for t in classes7:
        cells = refined_cells(t)
        order = np.asarray([v for c in cells for v in c], dtype=np.int64)
        bounds = np.cumsum([0] + [len(c) for c in cells]).astype(np.int64)
        canon_args.append((t.adjacency(), order, bounds))
    big = [random_tournament(22, rng) for _ in range(5)]
    mid = [random_tournament(14, rng) for _ in range(40)]
    host = [random_tournament(15, rng) for _ in range(5)]
    s1 = labelled_codes(build_named("S1"))
    full = lambda t: np.int64((1 << t.n) - 1)  # noqa: E731

    return {
        "canonical labelling (456 x n=7)":
            lambda k: [k.best_cell_labeling(*a) for a in canon_args],
        "max transitive (5 x n=22)":
            lambda k: [k.max_transitive(t.out_array(), full(t)) for t in big],
        "count transitive k=4 (40 x n=14)":
            lambda k: [k.count_transitive(t.out_array(), full(t), 4, 1 << 30) for t in mid],
        "homogeneous sets (40 x n=14)":
            lambda k: [list(k.homogeneous_masks(t.out_array(), t.n)) for t in mid],
        "galaxy search (456 x n=7)":
            lambda k: [list(k.galaxy_search(t.out_array(), 7)) for t in classes7],
        "find S1 copy (5 x n=15)":
            lambda k: [int(k.find_subset(t.out_array(), 15, 7, s1, np.int64(0), full(t))) for t in host],
    }


def plain(x):
    if isinstance(x, (tuple, list)):
        return [plain(y) for y in x]
    return np.asarray(x).tolist()


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    rows = []
    for name, work in workloads(rng).items():
        fast = plain(work(jit))  # warm-up and agreement
        slow = plain(work(ref))
        if fast != slow:
            raise SystemExit(f"{name}: implementations disagree")
        t_jit = best_of(lambda: work(jit), args.repeat)
        t_ref = best_of(lambda: work(ref), args.repeat)
        rows.append((name, t_jit, t_ref))

    print(f"{'workload':38} {'numba':>10} {'fallback':>10} {'speedup':>8}")
    for name, a, b in rows:
        print(f"{name:38} {a * 1e3:9.2f}ms {b * 1e3:9.2f}ms {b / a:7.1f}x")


if __name__ == "__main__":
    main()
