"""Canonical forms and isomorphism testing.

A canonical form is a byte certificate: one byte for n followed by the
packed upper triangle of the adjacency matrix under a canonical vertex
ordering.  Two graphs have equal certificates exactly when they are
isomorphic, and the certificate decodes back to a representative graph.
The ordering is found by degree-guided individualization-refinement search
(see the kernel modules); no external canonical-labeling library is used.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernel
from .graph import Graph

MAX_CANON_N = 63


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-invariant certificate of a graph."""

    certificate: bytes

    @property
    def n(self) -> int:
        return self.certificate[0]


def _masks_array(g: Graph) -> np.ndarray:
    out = np.zeros(g.n, dtype=np.int64)
    for v, nbrs in enumerate(g.adj):
        m = 0
        for u in nbrs:
            m |= 1 << u
        out[v] = m
    return out


def certificate_for_masks(masks: np.ndarray, n: int) -> bytes:
    """Certificate bytes for a graph given as int64 adjacency bitmask rows."""
    if n > MAX_CANON_N:
        raise ValueError(f"canonical form supports at most {MAX_CANON_N} vertices, got {n}")
    if n == 0:
        return bytes([0])
    bits = kernel.canonical_bits(masks, n)
    return bytes([n]) + np.packbits(bits).tobytes()


def canonical_form(g: Graph) -> CanonicalForm:
    """The canonical form of g; relabeling-invariant."""
    # size check must precede mask packing; bit 63 would overflow int64
    if g.n > MAX_CANON_N:
        raise ValueError(f"canonical form supports at most {MAX_CANON_N} vertices, got {g.n}")
    return CanonicalForm(certificate_for_masks(_masks_array(g), g.n))


def masks_from_certificate(cert: bytes) -> tuple[np.ndarray, int]:
    """Decode a certificate back to adjacency bitmask rows."""
    n = cert[0]
    L = n * (n - 1) // 2
    masks = np.zeros(n, dtype=np.int64)
    if L:
        bits = np.unpackbits(np.frombuffer(cert[1:], dtype=np.uint8), count=L)
        t = 0
        for i in range(n):
            for j in range(i + 1, n):
                if bits[t]:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
                t += 1
    return masks, n


def canonical_graph(cf: CanonicalForm) -> Graph:
    """The representative graph encoded by a canonical form."""
    masks, n = masks_from_certificate(cf.certificate)
    edges = []
    for i in range(n):
        m = int(masks[i])
        for j in range(i + 1, n):
            if m >> j & 1:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test via certificates, with cheap invariant fast paths."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
