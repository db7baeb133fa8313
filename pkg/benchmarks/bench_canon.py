"""Timing comparison of the two canonical-labeling kernels.

Runs the numpy reference kernel and the jit kernel over the same inputs:
every 2-tree class at a few enumeration sizes, plus single large family
graphs around n = 30.  Invoke as a script:

    python3 benchmarks/bench_canon.py
"""

import time

import numpy as np

from twotrees import _kernel_np
from twotrees.canon import _masks_array
from twotrees.census import enumerate_two_trees
from twotrees.families import (
    bicentral_sigma3,
    bicentral_standard,
    book,
    fan,
    tricentral_extremal,
    tricentral_gpq,
)

try:
    from twotrees import _kernel_jit
except ImportError:
    _kernel_jit = None


def class_workload(n):
    graphs = enumerate_two_trees(n)
    return f"all {len(graphs)} classes, n={n}", [
        (_masks_array(g), g.n) for g in graphs
    ]


def family_workload():
    graphs = [
        fan(30),
        book(28),
        bicentral_standard(30, 20),
        bicentral_sigma3(30, 5),
        tricentral_extremal(30),
        tricentral_gpq(7, 1, 2),
    ]
    return "six family graphs, n=30", [(_masks_array(g), g.n) for g in graphs]


def time_backend(kernel, inputs, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for masks, n in inputs:
            kernel.canonical_bits(masks.copy(), n)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    workloads = [class_workload(8), class_workload(9), class_workload(10), family_workload()]
    if _kernel_jit is not None:
        # first call includes compilation; do it off the clock
        warm = np.array([0b110, 0b101, 0b011], dtype=np.int64)
        _kernel_jit.canonical_bits(warm, 3)
    print(f"{'workload':<28} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for label, inputs in workloads:
        t_np = time_backend(_kernel_np, inputs, repeat=3)
        if _kernel_jit is None:
            print(f"{label:<28} {t_np * 1e3:>8.1f}ms {'-':>10} {'-':>8}")
            continue
        t_jit = time_backend(_kernel_jit, inputs, repeat=3)
        print(
            f"{label:<28} {t_np * 1e3:>8.1f}ms {t_jit * 1e3:>8.1f}ms {t_np / t_jit:>7.1f}x"
        )


if __name__ == "__main__":
    main()
