"""Time the compiled kernels against the pure-Python fallback.

Run from the repository root after building: ``python3 bench/bench_kernels.py``.
"""

from __future__ import annotations

import argparse
import random
import time

from radiogrid import _pykernels
from radiogrid.grid import GridGraph
from radiogrid.oracle import distance_matrix, symmetry_representatives

try:
    from radiogrid import _kernels
except ImportError:  # extension not built
    _kernels = None


def _timed(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(k):
    rng = random.Random(0)
    g = GridGraph(20, 20)
    verts = list(g.vertices())
    orders = []
    for _ in range(50):
        rng.shuffle(verts)
        orders.append(([v[0] for v in verts], [v[1] for v in verts]))
    d16 = distance_matrix(GridGraph(4, 4))
    d20 = distance_matrix(GridGraph(4, 5))
    table16 = _pykernels.tplus_table(d16)
    firsts = symmetry_representatives(GridGraph(4, 4))
    return {
        "greedy_labels 50x G_20,20": lambda: [k.greedy_labels(x, y, 38) for x, y in orders],
        "tplus_table G_4,4": lambda: k.tplus_table(d16),
        "tplus_table G_4,5": lambda: k.tplus_table(d20),
        "bnb_rn G_4,4": lambda: k.bnb_rn(d16, 6, table16, firsts, 6 * 15 + 1, 10**9),
        "odd_search G_21,21": lambda: k.odd_search(21, 21, 0, False, 3000),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _kernels is None:
        print("compiled kernels not built; only the fallback is available")
    py = workloads(_pykernels)
    cy = workloads(_kernels) if _kernels is not None else {}
    print(f"{'workload':<28} {'python [s]':>11} {'cython [s]':>11} {'speedup':>8}")
    for name, fn in py.items():
        tp = _timed(fn, args.repeat)
        if name in cy:
            tc = _timed(cy[name], args.repeat)
            print(f"{name:<28} {tp:>11.4f} {tc:>11.4f} {tp / tc:>7.1f}x")
        else:
            print(f"{name:<28} {tp:>11.4f} {'-':>11} {'-':>8}")


if __name__ == "__main__":
    main()
