"""Constructors for the six 2-tree families with tail degrees in {2, 3}.

Every constructor builds its graph by stacking, so outputs are 2-trees by
construction, and vertex numbering is deterministic and documented per
family.  A "page" is a degree-2 vertex stacked on a core edge; a "chain"
grown from a core vertex c is a path of stacked vertices each adjacent to c,
so all chain vertices except the last have degree 3 and the last has
degree 2.
"""

from __future__ import annotations

from .degseq import delta_range
from .graph import Graph, new_edge, new_triangle, stack


def _grow_chain(g: Graph, core: int, support: int, length: int) -> Graph:
    """Stack a chain of `length` vertices from `support` along `core`."""
    prev = support
    for _ in range(length):
        g, prev = stack(g, core, prev)
    return g


def fan(n: int) -> Graph:
    """The fan: hub 0 adjacent to the path 1-2-...-(n-1).

    The unique 2-tree whose maximum degree is attained by a single vertex
    of degree n - 1, for n >= 4.  Tail degrees: the path ends have degree 2
    and the interior path vertices degree 3.
    """
    if n < 3:
        raise ValueError(f"fan needs n >= 3, got {n}")
    g = new_triangle()
    for v in range(3, n):
        g, _ = stack(g, 0, v - 1)
    return g


def book(m: int) -> Graph:
    """The book with m pages: spine edge 01, pages 2..m+1 (n = m + 2).

    Both spine vertices have degree m + 1 and every page has degree 2; for
    m >= 2 this is the bicentral graph with no degree-3 vertices.
    """
    if m < 1:
        raise ValueError(f"book needs at least one page, got {m}")
    g = new_edge()
    for _ in range(m):
        g, _ = stack(g, 0, 1)
    return g


def bicentral_standard(n: int, delta: int) -> Graph:
    """The bicentral 2-tree with two length-K chains, one per core vertex.

    Cores 0 and 1 (degree delta each) share y = 2*delta - n pages numbered
    2..y+1; a chain of length K = n - delta - 1 grows from page 2 along
    core 0 and another from page 3 along core 1.  For K = 0 this is the
    book; for K >= 1 both chain supports have degree 3 and sit in the
    common neighborhood of the cores, so exactly two activated vertices.

    Raises when delta is outside the feasible core-degree range for (n, 2).
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    if delta not in delta_range(n, 2):
        raise ValueError(f"no bicentral 2-tree on {n} vertices with core degree {delta}")
    y = 2 * delta - n
    K = n - delta - 1
    g = book(y)  # feasibility gives y >= 2
    g = _grow_chain(g, 0, 2, K)
    g = _grow_chain(g, 1, 3, K)
    return g


def bicentral_sigma3(n: int, K: int) -> Graph:
    """A bicentral 2-tree with three activated common neighbors.

    Cores 0 and 1 share y = n - 2 - 2K pages numbered 2..y+1; core 0 grows
    a chain of length 1 from page 2 and a chain of length K - 1 from page 3,
    core 1 grows a chain of length K from page 4.  Pages 2, 3, 4 then all
    have degree 3, giving three activated vertices, while the core degree is
    y + 1 + K on both sides.

    Needs K >= 2 (so the supports really reach degree 3) and
    2K <= n - 5 (so at least three pages exist); together n >= 9.
    """
    if K < 2:
        raise ValueError(f"need K >= 2, got {K}")
    y = n - 2 - 2 * K
    if y < 3:
        raise ValueError(f"need 2K <= n - 5 for three chain supports, got n={n}, K={K}")
    g = book(y)
    g = _grow_chain(g, 0, 2, 1)
    g = _grow_chain(g, 0, 3, K - 1)
    g = _grow_chain(g, 1, 4, K)
    return g


def tricentral_extremal(n: int) -> Graph:
    """The tricentral 2-tree with smallest core degree: a triangle with
    n/3 - 1 pages on each of its three edges.

    Requires n divisible by 3, n >= 3.  Each core vertex has degree 2n/3
    and every page degree 2; n = 3 gives the bare triangle, the degenerate
    all-core case.
    """
    if n % 3 != 0:
        raise ValueError(f"need n divisible by 3, got {n}")
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    pages = n // 3 - 1
    g = new_triangle()
    for a, b in ((0, 1), (1, 2), (2, 0)):
        for _ in range(pages):
            g, _ = stack(g, a, b)
    return g


def tricentral_gpq(K: int, p: int, q: int) -> Graph:
    """The chain-decorated tricentral family G(p, q) on n = 9 + 3K vertices.

    Core triangle 0, 1, 2; each core edge carries two pages (vertices 3..8:
    3 and 4 on edge 01, 5 and 6 on edge 12, 7 and 8 on edge 20).  Five
    chains with total length 3K are grown from the cores along pages:

        core 0: length p from page 3, length K - p from page 8,
        core 1: length q from page 5, length K - q from page 4,
        core 2: length K from page 7.

    Page 6 stays a plain degree-2 page.  Every core vertex then has degree
    6 + K.  Parameters need K >= 4 and 1 <= p < q <= K // 2; distinct (p, q)
    in that range give pairwise non-isomorphic graphs.
    """
    if K < 4:
        raise ValueError(f"need K >= 4, got {K}")
    if not 1 <= p < q <= K // 2:
        raise ValueError(f"need 1 <= p < q <= K//2, got p={p}, q={q}, K={K}")
    g = new_triangle()
    for a, b in ((0, 1), (0, 1), (1, 2), (1, 2), (2, 0), (2, 0)):
        g, _ = stack(g, a, b)
    g = _grow_chain(g, 0, 3, p)
    g = _grow_chain(g, 0, 8, K - p)
    g = _grow_chain(g, 1, 5, q)
    g = _grow_chain(g, 1, 4, K - q)
    g = _grow_chain(g, 2, 7, K)
    return g
