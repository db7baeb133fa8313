"""Classification of 2-trees by their maximum-degree core."""

import pytest

from twotrees.census import enumerate_central, enumerate_two_trees
from twotrees.classify import (
    CentralClassification,
    Unclassifiable,
    classify_central,
    sigma,
)
from twotrees.degseq import tail_params
from twotrees.families import bicentral_standard, book, fan, tricentral_extremal
from twotrees.graph import Graph, new_edge, new_triangle, stack


def cycle4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


class TestClassifyCentral:
    def test_fan(self):
        c = classify_central(fan(7))
        assert isinstance(c, CentralClassification)
        assert (c.r, c.delta, c.x, c.y) == (1, 6, 4, 2)
        assert c.strong and c.core == frozenset({0})
        assert c.sigma is None

    def test_extremal_tricentral(self):
        c = classify_central(tricentral_extremal(9))
        assert (c.r, c.delta, c.x, c.y) == (3, 6, 0, 6)
        assert c.strong
        assert c.core == frozenset({0, 1, 2})

    def test_triangle(self):
        c = classify_central(new_triangle())
        assert (c.r, c.delta, c.x, c.y, c.strong, c.sigma) == (3, 2, 0, 0, True, None)

    def test_not_a_two_tree(self):
        u = classify_central(cycle4())
        assert isinstance(u, Unclassifiable)
        assert "2-tree" in u.reason

    def test_single_edge(self):
        assert isinstance(classify_central(new_edge()), Unclassifiable)

    def test_high_tail_degree_rejected(self):
        # two stackings on the same region push a non-core vertex to degree 4
        g = fan(5)
        g, w = stack(g, 1, 2)
        g, _ = stack(g, 2, w)
        degs = sorted(g.degrees(), reverse=True)
        assert degs[0] > degs[1] and 4 in degs[1:]
        u = classify_central(g)
        assert isinstance(u, Unclassifiable)
        assert "tail" in u.reason or "degree" in u.reason

    def test_oversized_core_rejected(self):
        hits = 0
        for g in enumerate_two_trees(8):
            degs = g.degrees()
            top = max(degs)
            if degs.count(top) > 3:
                hits += 1
                u = classify_central(g)
                assert isinstance(u, Unclassifiable)
        assert hits > 0

    def test_cores_are_always_strong_at_small_orders(self):
        # {2,3}-degree tails force pairwise-adjacent cores: no weak instance
        # appears anywhere in the small enumerations
        for n in range(3, 10):
            for g in enumerate_two_trees(n):
                c = classify_central(g)
                if isinstance(c, CentralClassification):
                    assert c.strong, (n, g.edges())

    def test_xy_match_closed_forms_up_to_9(self):
        for n in range(3, 10):
            for g in enumerate_two_trees(n):
                c = classify_central(g)
                if not isinstance(c, CentralClassification):
                    continue
                profile = tail_params(n, c.r, c.delta)
                assert (c.x, c.y) == (profile.x, profile.y)
                assert c.r + c.x + c.y == n

    def test_two_support_structure(self):
        # strong bicentral with exactly two degree-3 vertices: both lie in the
        # shared neighborhood of the core pair, and that neighborhood has n-4
        # vertices
        seen = 0
        for n in range(6, 11):
            for rec in enumerate_central(n, 2):
                if rec.x != 2 or rec.graphs is None:
                    continue
                for g in rec.graphs:
                    c = classify_central(g)
                    if not isinstance(c, CentralClassification) or not c.strong:
                        continue
                    seen += 1
                    a, b = sorted(c.core)
                    shared = (g.adj[a] & g.adj[b]) - {a, b}
                    assert len(shared) == n - 4
                    threes = {v for v in range(n) if g.degree(v) == 3}
                    assert threes <= shared
        assert seen >= 4


class TestSigma:
    def test_book_has_no_degree3_shared_neighbors(self):
        assert sigma(book(6)) == 0

    def test_standard_construction_gives_two(self):
        assert sigma(bicentral_standard(10, 7)) == 2

    def test_rejects_non_bicentral(self):
        with pytest.raises(ValueError):
            sigma(fan(8))

    def test_rejects_non_two_tree(self):
        with pytest.raises(ValueError):
            sigma(cycle4())

    def test_range_over_enumeration(self):
        values = set()
        for n in range(4, 10):
            for g in enumerate_two_trees(n):
                c = classify_central(g)
                if isinstance(c, CentralClassification) and c.sigma is not None:
                    assert c.sigma == sigma(g)
                    values.add(c.sigma)
        assert values == {0, 2, 3}
