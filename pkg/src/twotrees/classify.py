"""Classification of 2-trees by their maximum-degree core.

A 2-tree is r-central when exactly r vertices attain the maximum degree,
and strong when those r vertices are pairwise adjacent.  Graphs whose
non-core vertices all have degree 2 or 3 carry the tail counts (x, y).
For strong bicentral graphs the activation count sigma is the number of
degree-3 vertices among the common neighbors of the two core vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, is_two_tree


@dataclass(frozen=True)
class CentralClassification:
    """Core data of a classified 2-tree.

    x and y count the degree-3 and degree-2 non-core vertices; sigma is
    the activation count for strong bicentral graphs and None elsewhere.
    """

    r: int
    delta: int
    core: frozenset[int]
    x: int
    y: int
    strong: bool
    sigma: int | None


@dataclass(frozen=True)
class Unclassifiable:
    """Returned when a graph has no r-central {2,3}-tail classification."""

    reason: str


def classify_central(g: Graph) -> CentralClassification | Unclassifiable:
    """Classify g, or explain why it falls outside the classified family.

    The result is data, not an error: non-2-trees, core sizes above 3, and
    tail degrees outside {2, 3} all yield an Unclassifiable with a reason.
    """
    if not is_two_tree(g):
        return Unclassifiable("not a 2-tree")
    if g.n < 3:
        return Unclassifiable("the single edge has no core triangle structure")
    degs = g.degrees()
    delta = max(degs)
    core = frozenset(v for v in range(g.n) if degs[v] == delta)
    r = len(core)
    if r > 3:
        return Unclassifiable(f"{r} vertices attain the maximum degree, more than 3")
    bad = [v for v in range(g.n) if v not in core and degs[v] not in (2, 3)]
    if bad:
        return Unclassifiable(
            f"vertex {bad[0]} has degree {degs[bad[0]]}, outside the {{2, 3}} tail range"
        )
    x = sum(1 for v in range(g.n) if v not in core and degs[v] == 3)
    y = sum(1 for v in range(g.n) if v not in core and degs[v] == 2)
    strong = all(u in g.adj[v] for u in core for v in core if u < v)
    sig = _sigma_of_core(g, core) if (strong and r == 2) else None
    return CentralClassification(r, delta, core, x, y, strong, sig)


def _sigma_of_core(g: Graph, core: frozenset[int]) -> int:
    a, b = sorted(core)
    shared = (g.adj[a] & g.adj[b]) - {a, b}
    return sum(1 for v in shared if g.degree(v) == 3)


def sigma(g: Graph) -> int:
    """Activated common neighbors of a strong bicentral 2-tree.

    Counts the degree-3 vertices among the common neighbors of the two
    core vertices.  Raises ValueError when g is not a strong bicentral
    2-tree, where the quantity is undefined.
    """
    c = classify_central(g)
    if isinstance(c, Unclassifiable):
        raise ValueError(f"sigma undefined: {c.reason}")
    if c.r != 2 or not c.strong:
        raise ValueError("sigma is defined only for strong bicentral 2-trees")
    assert c.sigma is not None
    return c.sigma
