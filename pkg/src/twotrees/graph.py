"""Simple undirected graphs built by stacking triangles on edges.

A stacked graph starts from a single edge or triangle and grows by repeatedly
attaching a new vertex to both ends of an existing edge.  Graphs built this
way from a triangle are exactly the 2-trees: n vertices, 2n - 3 edges, every
edge lying in a triangle, chordal.  This module provides the immutable Graph
value type, the stacking constructors, recognition of stacked graphs, and
extraction and replay of a stacking order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1 with adjacency sets."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal vertex count")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range")
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        return cls(n, tuple(frozenset(s) for s in sets))

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        return tuple(
            (u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v
        )

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degrees(self) -> tuple[int, ...]:
        """Degrees indexed by vertex (not sorted)."""
        return tuple(len(s) for s in self.adj)

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges()]}

    def to_json(self) -> str:
        # key order and separators are fixed so output is byte-stable
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, obj: dict) -> "Graph":
        if not isinstance(obj, dict) or set(obj) != {"n", "edges"}:
            raise ValueError('graph object must have exactly the keys "n" and "edges"')
        n = obj["n"]
        if not isinstance(n, int) or n < 0:
            raise ValueError('"n" must be a nonnegative integer')
        edges = []
        for e in obj["edges"]:
            if not (isinstance(e, (list, tuple)) and len(e) == 2):
                raise ValueError(f"bad edge entry {e!r}")
            u, v = e
            if not (isinstance(u, int) and isinstance(v, int) and 0 <= u < v < n):
                raise ValueError(f"edge {e!r} must list two vertices u < v within range")
            edges.append((u, v))
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate edge")
        return cls.from_edges(n, edges)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(obj)


@dataclass(frozen=True)
class StackingTrace:
    """A construction order for a stacked graph.

    base holds the vertices of the starting edge (length 2) or triangle
    (length 3); each step (u, v, w) attaches new vertex w to the existing
    edge uv.  Replaying the trace rebuilds the graph it was extracted from,
    with identical vertex labels.
    """

    base: tuple[int, ...]
    steps: tuple[tuple[int, int, int], ...]


def new_edge() -> Graph:
    """The single edge K2, the degenerate stacking base."""
    return Graph.from_edges(2, [(0, 1)])


def new_triangle() -> Graph:
    """The triangle K3, the smallest 2-tree."""
    return Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


def stack(g: Graph, u: int, v: int) -> tuple[Graph, int]:
    """Attach a new vertex to the edge uv; returns (new graph, new vertex)."""
    if not 0 <= u < g.n or not 0 <= v < g.n:
        raise ValueError(f"vertex out of range: ({u}, {v})")
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    w = g.n
    sets = [set(s) for s in g.adj] + [{u, v}]
    sets[u].add(w)
    sets[v].add(w)
    return Graph(w + 1, tuple(frozenset(s) for s in sets)), w


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the relabeling v -> perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    sets: list[set[int]] = [set() for _ in range(g.n)]
    for v, nbrs in enumerate(g.adj):
        sets[perm[v]] = {perm[u] for u in nbrs}
    return Graph(g.n, tuple(frozenset(s) for s in sets))


def _adjacency_masks(g: Graph) -> list[int]:
    out = []
    for nbrs in g.adj:
        m = 0
        for u in nbrs:
            m |= 1 << u
        out.append(m)
    return out


def _reduce_masks(masks: list[int], n: int) -> list[tuple[int, int, int]] | None:
    """Greedy reduction: repeatedly delete the lowest-indexed vertex of degree
    2 whose two neighbors are adjacent, until an edge or triangle remains.

    Returns the list of removals (w, u, v) with u < v the neighbors of w at
    removal time, or None if the graph is not reducible this way.  masks is
    modified in place; removed vertices keep index but become isolated.
    """
    alive = (1 << n) - 1
    live = n
    removals: list[tuple[int, int, int]] = []
    while live > 3:
        found = -1
        for w in range(n):
            if not alive >> w & 1:
                continue
            mw = masks[w]
            if _popcount(mw) != 2:
                continue
            u = _lowest_bit(mw)
            v = _lowest_bit(mw & ~(1 << u))
            if masks[u] >> v & 1:
                found = w
                break
        if found < 0:
            return None
        w = found
        mw = masks[w]
        u = _lowest_bit(mw)
        v = _lowest_bit(mw & ~(1 << u))
        masks[u] &= ~(1 << w)
        masks[v] &= ~(1 << w)
        masks[w] = 0
        alive &= ~(1 << w)
        live -= 1
        removals.append((w, u, v))
    # the remnant must be a triangle, or an edge when n == 2
    rest = [v for v in range(n) if alive >> v & 1]
    if live == 3:
        a, b, c = rest
        ok = (masks[a] >> b & 1) and (masks[a] >> c & 1) and (masks[b] >> c & 1)
        if not ok:
            return None
    elif live == 2:
        a, b = rest
        if not masks[a] >> b & 1:
            return None
    else:
        return None
    return removals


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def _is_two_tree_masks(masks: list[int], n: int, m: int) -> bool:
    if n < 2:
        return False
    if m != 2 * n - 3 and not (n == 2 and m == 1):
        return False
    return _reduce_masks(list(masks), n) is not None


def is_two_tree(g: Graph) -> bool:
    """True when g is a 2-tree (or the single edge, the degenerate base)."""
    return _is_two_tree_masks(_adjacency_masks(g), g.n, g.m)


def stacking_trace(g: Graph) -> StackingTrace | None:
    """A stacking order for g, or None when g is not a stacked graph.

    Deterministic: the greedy reduction always removes the lowest-indexed
    removable vertex, and the trace lists attachments in construction order.
    """
    if g.n < 2:
        return None
    if g.m != 2 * g.n - 3 and not (g.n == 2 and g.m == 1):
        return None
    masks = _adjacency_masks(g)
    removals = _reduce_masks(masks, g.n)
    if removals is None:
        return None
    # reduction leaves the base vertices with nonzero masks, removed ones zeroed
    base = tuple(v for v in range(g.n) if masks[v] != 0)
    steps = tuple((u, v, w) for (w, u, v) in reversed(removals))
    return StackingTrace(base=base, steps=steps)


def replay_trace(trace: StackingTrace) -> Graph:
    """Rebuild the graph described by a stacking trace.

    Raises ValueError when the trace is inconsistent (unknown endpoints,
    missing edge, reused vertex, or labels that do not cover 0..n-1).
    """
    if len(trace.base) == 2:
        a, b = trace.base
        if a == b:
            raise ValueError("base edge endpoints must differ")
        sets: dict[int, set[int]] = {a: {b}, b: {a}}
    elif len(trace.base) == 3:
        a, b, c = trace.base
        if len({a, b, c}) != 3:
            raise ValueError("base triangle vertices must be distinct")
        sets = {a: {b, c}, b: {a, c}, c: {a, b}}
    else:
        raise ValueError("base must have 2 or 3 vertices")
    for u, v, w in trace.steps:
        if w in sets:
            raise ValueError(f"vertex {w} attached twice")
        if u not in sets or v not in sets:
            raise ValueError(f"step ({u}, {v}, {w}) references unknown endpoint")
        if v not in sets[u]:
            raise ValueError(f"step ({u}, {v}, {w}): uv is not an edge")
        sets[u].add(w)
        sets[v].add(w)
        sets[w] = {u, v}
    n = len(sets)
    if set(sets) != set(range(n)):
        raise ValueError("trace labels must cover 0..n-1 exactly")
    return Graph(n, tuple(frozenset(sets[v]) for v in range(n)))
