"""Pure-numpy canonical labeling kernel.

Certificate search by individualization and refinement: colors start from a
single class, are refined by iterated neighbor-color counting, and whenever
the coloring is not discrete the search individualizes each member of the
first non-singleton color class in turn.  Every discrete coloring reached
encodes the upper triangle of the permuted adjacency matrix as a bit row;
the certificate is the lexicographically smallest such row.

Vertices whose adjacency outside a candidate pair is identical (twins) are
interchangeable, so only one representative per twin class is branched on.
The minimum over leaves does not depend on that pruning or on search order.
"""

from __future__ import annotations

import numpy as np


def _unpack(masks: np.ndarray, n: int) -> np.ndarray:
    A = np.zeros((n, n), dtype=bool)
    for v in range(n):
        m = int(masks[v])
        while m:
            low = m & -m
            A[v, low.bit_length() - 1] = True
            m ^= low
    return A


def _lex_less(a: np.ndarray, b: np.ndarray) -> bool:
    diff = np.flatnonzero(a != b)
    return diff.size > 0 and a[diff[0]] < b[diff[0]]


def _twins(A: np.ndarray, u: int, v: int) -> bool:
    wu = A[u].copy()
    wv = A[v].copy()
    wu[u] = wu[v] = False
    wv[u] = wv[v] = False
    return bool((wu == wv).all())


def canonical_bits(masks: np.ndarray, n: int) -> np.ndarray:
    """Certificate bits (uint8 0/1, row-major upper triangle) for the graph
    given as bitmask adjacency rows."""
    A = _unpack(masks, n)
    A_int = A.astype(np.int32)
    iu = np.triu_indices(n, 1)
    best: np.ndarray | None = None
    idx = np.arange(n)

    def refine(colors: np.ndarray) -> np.ndarray:
        while True:
            k = int(colors.max()) + 1
            onehot = np.zeros((n, k), dtype=np.int32)
            onehot[idx, colors] = 1
            sig = np.concatenate([colors[:, None], A_int @ onehot], axis=1)
            _, inv = np.unique(sig, axis=0, return_inverse=True)
            inv = inv.astype(np.int64).reshape(-1)
            if np.array_equal(inv, colors):
                return colors
            colors = inv

    def visit(colors: np.ndarray) -> None:
        nonlocal best
        k = int(colors.max()) + 1
        if k == n:
            order = np.argsort(colors)
            bits = A[np.ix_(order, order)][iu].astype(np.uint8)
            if best is None or _lex_less(bits, best):
                best = bits
            return
        counts = np.bincount(colors, minlength=k)
        c = int(np.flatnonzero(counts > 1)[0])
        cell = np.flatnonzero(colors == c)
        tried: list[int] = []
        for v in cell:
            v = int(v)
            if any(_twins(A, u, v) for u in tried):
                continue
            tried.append(v)
            child = colors.copy()
            child[(colors > c) | ((colors == c) & (idx != v))] += 1
            visit(refine(child))

    visit(refine(np.zeros(n, dtype=np.int64)))
    assert best is not None
    return best
