"""Canonical forms: backend agreement, invariance, decoding, isomorphism."""

import itertools
import random

import numpy as np
import pytest

from oracles import brute_canonical_id, permutation_isomorphic
from twotrees import _kernel_jit, _kernel_np
from twotrees.canon import (
    MAX_CANON_N,
    canonical_form,
    canonical_graph,
    certificate_for_masks,
    is_isomorphic,
    masks_from_certificate,
)
from twotrees.census import two_tree_certificates
from twotrees.families import book, fan, tricentral_gpq
from twotrees.graph import Graph, new_triangle, relabel, stack


def random_graph_masks(n: int, p: float, rng: random.Random) -> np.ndarray:
    masks = np.zeros(n, dtype=np.int64)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
    return masks


def random_two_tree(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    g = new_triangle()
    for _ in range(n - 3):
        u, v = rng.choice(g.edges())
        g, _ = stack(g, u, v)
    return g


class TestBackendAgreement:
    def test_on_enumerated_classes(self):
        for cert in two_tree_certificates(8):
            masks, n = masks_from_certificate(cert)
            a = _kernel_np.canonical_bits(masks, n)
            b = _kernel_jit.canonical_bits(masks, n)
            assert np.array_equal(a, b)

    def test_on_random_graphs(self):
        rng = random.Random(11)
        for trial in range(120):
            n = rng.randrange(1, 13)
            masks = random_graph_masks(n, rng.choice([0.15, 0.4, 0.8]), rng)
            a = _kernel_np.canonical_bits(masks, n)
            b = _kernel_jit.canonical_bits(masks, n)
            assert np.array_equal(a, b), (n, list(map(int, masks)))


class TestCanonicalForm:
    def test_relabeling_invariance(self):
        rng = random.Random(23)
        for seed in range(20):
            g = random_two_tree(4 + seed % 8, seed)
            base = canonical_form(g)
            for _ in range(20):
                perm = list(range(g.n))
                rng.shuffle(perm)
                assert canonical_form(relabel(g, perm)) == base

    def test_partition_matches_brute_force_on_n6(self):
        # certificate equality must induce exactly the same partition as
        # the minimum over all permutations
        pairs = list(itertools.combinations(range(6), 2))
        cert_to_brute = {}
        brute_to_cert = {}
        for bits in range(1 << len(pairs)):
            masks = [0] * 6
            for t, (u, v) in enumerate(pairs):
                if bits >> t & 1:
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
            cert = certificate_for_masks(np.array(masks, dtype=np.int64), 6)
            bid = brute_canonical_id(masks, 6)
            assert cert_to_brute.setdefault(cert, bid) == bid
            assert brute_to_cert.setdefault(bid, cert) == cert

    def test_decode_round_trip(self):
        for seed in range(15):
            g = random_two_tree(5 + seed % 7, 50 + seed)
            cf = canonical_form(g)
            rep = canonical_graph(cf)
            assert rep.n == g.n and rep.m == g.m
            assert canonical_form(rep) == cf
            assert is_isomorphic(rep, g)

    def test_certificate_shape(self):
        cf = canonical_form(new_triangle())
        assert cf.certificate[0] == 3 == cf.n
        assert len(cf.certificate) == 1 + (3 + 7) // 8

    def test_empty_and_single_vertex(self):
        assert canonical_form(Graph(0, ())).certificate == bytes([0])
        assert canonical_form(Graph(1, (frozenset(),))).certificate == bytes([1])

    def test_size_cap(self):
        path = Graph.from_edges(64, [(i, i + 1) for i in range(63)])
        with pytest.raises(ValueError):
            canonical_form(path)
        path63 = Graph.from_edges(63, [(i, i + 1) for i in range(62)])
        cf = canonical_form(path63)
        assert canonical_form(canonical_graph(cf)) == cf


class TestIsIsomorphic:
    def test_examples(self):
        assert not is_isomorphic(book(3), fan(5))
        g = tricentral_gpq(7, 1, 2)
        h = tricentral_gpq(7, 1, 3)
        assert not is_isomorphic(g, h)
        assert is_isomorphic(g, g)

    def test_equivalence_relation_on_enumerated_classes(self):
        rng = random.Random(77)
        reps = [canonical_graph_from_cert(c) for c in two_tree_certificates(7)]
        shuffled = []
        for g in reps:
            perm = list(range(g.n))
            rng.shuffle(perm)
            shuffled.append(relabel(g, perm))
        for i, g in enumerate(reps):
            assert is_isomorphic(g, g)
            for j, h in enumerate(shuffled):
                same = is_isomorphic(g, h)
                assert same == (i == j)
                assert same == is_isomorphic(h, g)

    def test_agrees_with_permutation_search_up_to_7(self):
        rng = random.Random(5)
        for n in range(3, 8):
            reps = [canonical_graph_from_cert(c) for c in two_tree_certificates(n)]
            variants = []
            for g in reps:
                perm = list(range(n))
                rng.shuffle(perm)
                variants.append(relabel(g, perm))
            everything = reps + variants
            for g, h in itertools.combinations(everything, 2):
                got = is_isomorphic(g, h)
                want = permutation_isomorphic(_masks(g), _masks(h), n)
                assert got == want

    def test_different_sizes(self):
        assert not is_isomorphic(new_triangle(), fan(4))


def _masks(g: Graph) -> list[int]:
    out = []
    for nbrs in g.adj:
        m = 0
        for u in nbrs:
            m |= 1 << u
        out.append(m)
    return out


def canonical_graph_from_cert(cert: bytes) -> Graph:
    from twotrees.canon import CanonicalForm

    return canonical_graph(CanonicalForm(cert))
