"""Numba-accelerated canonical labeling kernel.

Same contract and same certificate as _kernel_np.canonical_bits; the search
is an explicit-stack rewrite of the recursive individualization-refinement
so the whole kernel compiles under nopython mode.  Adjacency rows are int64
bitmasks, which caps graphs at 63 vertices (the sign bit stays clear).
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True, inline="always")
def _popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56


@njit(cache=True, nogil=True)
def _sig_gt(sig, a, b, width):
    for t in range(width):
        if sig[a, t] != sig[b, t]:
            return sig[a, t] > sig[b, t]
    return False


@njit(cache=True, nogil=True)
def _sig_ne(sig, a, b, width):
    for t in range(width):
        if sig[a, t] != sig[b, t]:
            return True
    return False


@njit(cache=True, nogil=True)
def _refine(masks, n, colors, cmask, sig, order, newc):
    """Iterated neighbor-color counting until the coloring is stable.

    colors is updated in place; new classes are numbered by the rank of
    their (old color, counts per old color) signature in lexicographic
    order.  Returns the number of color classes.
    """
    while True:
        k = 0
        for v in range(n):
            if colors[v] + 1 > k:
                k = colors[v] + 1
        for c in range(k):
            cmask[c] = 0
        for v in range(n):
            cmask[colors[v]] |= np.int64(1) << v
        width = k + 1
        for v in range(n):
            sig[v, 0] = colors[v]
            mv = masks[v]
            for c in range(k):
                sig[v, 1 + c] = _popcount(mv & cmask[c])
        for i in range(n):
            order[i] = i
        for i in range(1, n):
            vi = order[i]
            j = i - 1
            while j >= 0 and _sig_gt(sig, order[j], vi, width):
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = vi
        rank = 0
        newc[order[0]] = 0
        for i in range(1, n):
            if _sig_ne(sig, order[i - 1], order[i], width):
                rank += 1
            newc[order[i]] = rank
        changed = False
        for v in range(n):
            if newc[v] != colors[v]:
                colors[v] = newc[v]
                changed = True
        if not changed:
            return rank + 1


@njit(cache=True, nogil=True)
def _leaf(masks, n, colors, pos, cur, best, have_best):
    """Encode the discrete coloring and fold it into the running minimum."""
    for v in range(n):
        pos[colors[v]] = v
    t = 0
    for i in range(n):
        mi = masks[pos[i]]
        for j in range(i + 1, n):
            cur[t] = (mi >> pos[j]) & 1
            t += 1
    if have_best:
        for s in range(t):
            if cur[s] != best[s]:
                if cur[s] < best[s]:
                    for s2 in range(t):
                        best[s2] = cur[s2]
                break
    else:
        for s in range(t):
            best[s] = cur[s]
    return True


@njit(cache=True, nogil=True)
def _target_cell(colors, n, counts, cands, row):
    """Fill cands[row] with the first non-singleton color class, ascending.

    Returns the class size, or 0 when the coloring is discrete.
    """
    for c in range(n):
        counts[c] = 0
    for v in range(n):
        counts[colors[v]] += 1
    target = -1
    for c in range(n):
        if counts[c] > 1:
            target = c
            break
    if target < 0:
        return 0
    k = 0
    for v in range(n):
        if colors[v] == target:
            cands[row, k] = v
            k += 1
    return k


@njit(cache=True, nogil=True)
def canonical_bits(masks, n):
    """Certificate bits (uint8 0/1, row-major upper triangle) for the graph
    given as int64 bitmask adjacency rows."""
    L = n * (n - 1) // 2
    best = np.zeros(L, dtype=np.uint8)
    cur = np.zeros(L, dtype=np.uint8)
    have_best = False

    cmask = np.zeros(n + 1, dtype=np.int64)
    sig = np.zeros((n, n + 2), dtype=np.int64)
    sorder = np.zeros(n, dtype=np.int64)
    newc = np.zeros(n, dtype=np.int64)
    counts = np.zeros(n + 1, dtype=np.int64)
    pos = np.zeros(n, dtype=np.int64)

    depth_cap = n + 2
    colors_stack = np.zeros((depth_cap, n), dtype=np.int64)
    cands = np.zeros((depth_cap, n), dtype=np.int64)
    ncand = np.zeros(depth_cap, dtype=np.int64)
    cidx = np.zeros(depth_cap, dtype=np.int64)
    tried = np.zeros((depth_cap, n), dtype=np.int64)
    ntried = np.zeros(depth_cap, dtype=np.int64)

    colors = colors_stack[0]
    for v in range(n):
        colors[v] = 0
    _refine(masks, n, colors, cmask, sig, sorder, newc)
    size = _target_cell(colors, n, counts, cands, 0)
    if size == 0:
        have_best = _leaf(masks, n, colors, pos, cur, best, have_best)
        return best
    ncand[0] = size
    cidx[0] = 0
    ntried[0] = 0

    d = 0
    while d >= 0:
        colors = colors_stack[d]
        i = cidx[d]
        nc = ncand[d]
        v = -1
        while i < nc:
            v = cands[d, i]
            is_dup = False
            for t in range(ntried[d]):
                u = tried[d, t]
                keep = ~((np.int64(1) << u) | (np.int64(1) << v))
                if (masks[u] & keep) == (masks[v] & keep):
                    is_dup = True
                    break
            if not is_dup:
                break
            i += 1
        if i >= nc:
            d -= 1
            continue
        cidx[d] = i + 1
        tried[d, ntried[d]] = v
        ntried[d] += 1

        c = colors[v]
        child = colors_stack[d + 1]
        for u in range(n):
            cu = colors[u]
            if cu > c or (cu == c and u != v):
                child[u] = cu + 1
            else:
                child[u] = cu
        _refine(masks, n, child, cmask, sig, sorder, newc)
        size = _target_cell(child, n, counts, cands, d + 1)
        if size == 0:
            have_best = _leaf(masks, n, child, pos, cur, best, have_best)
        else:
            d += 1
            ncand[d] = size
            cidx[d] = 0
            ntried[d] = 0
    return best
