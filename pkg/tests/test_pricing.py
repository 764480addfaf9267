import random
from fractions import Fraction as F

import pytest

from fairgraph.errors import SizeLimitError
from fairgraph.graph import Graph, complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from fairgraph.pricing import (canonical_integer_weights, max_weight_independent_set, max_weight_matching,
                               max_weight_perfect_matching, price_independent_set, price_matching_edges,
                               price_matching_vertices)
from fairgraph.setsystems import ProblemKind, is_member

from oracles import (all_independent_sets, all_matchings, brute_mwis, brute_perfect_matching,
                     brute_weighted_matching, covered, random_fraction, random_graph)


class TestMaxWeightMatching:
    def test_path(self):
        res = max_weight_matching(path_graph(3), [2, 3])
        assert res.matching == ((1, 2),) and res.weight == 3

    def test_c4_unit(self):
        res = max_weight_matching(cycle_graph(4), [1] * 4)
        assert res.weight == 2 and res.is_perfect

    def test_all_negative(self):
        res = max_weight_matching(complete_graph(4), [-1] * 6)
        assert res.matching == () and res.weight == 0

    def test_exact_rationals(self):
        # weights differing below float resolution
        eps = F(1, 10**30)
        res = max_weight_matching(path_graph(3), [F(1), F(1) + eps])
        assert res.matching == ((1, 2),)

    def test_mapping_weights(self):
        res = max_weight_matching(path_graph(3), {(0, 1): 5})
        assert res.matching == ((0, 1),)


class TestPerfectMatching:
    def test_single_edge(self):
        res = max_weight_perfect_matching(Graph(2, ((0, 1),)), [5])
        assert res.weight == 5 and res.is_perfect

    def test_odd(self):
        assert max_weight_perfect_matching(path_graph(3), [1, 1]) is None

    def test_c4_weights(self):
        # cycle edges in order 0-1, 1-2, 2-3, 3-0; opposite pairs (0-1, 2-3) and (1-2, 3-0)
        g = cycle_graph(4)
        w = {(0, 1): 1, (2, 3): 2, (1, 2): 1, (0, 3): 2}
        assert max_weight_perfect_matching(g, w).weight == 3

    def test_prefers_perfect_over_heavy(self):
        g = path_graph(4)
        res = max_weight_perfect_matching(g, [1, 100, 1])
        assert set(res.matching) == {(0, 1), (2, 3)}

    def test_no_perfect_even(self):
        assert max_weight_perfect_matching(star_graph(3), [1, 1, 1]) is None


class TestPricing:
    def test_edges_nonnegative(self):
        assert price_matching_edges(complete_graph(4), [1] * 6) == ()

    def test_edges_k3(self):
        assert len(price_matching_edges(complete_graph(3), [-1, -1, -1])) == 1

    def test_edges_p4(self):
        g = path_graph(4)
        assert price_matching_edges(g, [-1, -5, -1]) == ((1, 2),)

    def test_vertices_nonnegative(self):
        assert price_matching_vertices(cycle_graph(5), [0] * 5) == ()

    def test_vertices_positive_pairs(self):
        assert price_matching_vertices(path_graph(3), [-1, 3, -1]) == ()

    def test_vertices_best_pair(self):
        assert price_matching_vertices(path_graph(3), [-1, -1, -3]) == (1, 2)


class TestIndependentSet:
    def test_nonpositive(self):
        assert max_weight_independent_set(cycle_graph(5), [0, -1, 0, -2, 0]) == ()

    def test_c5_unit(self):
        s = max_weight_independent_set(cycle_graph(5), [1] * 5)
        assert len(s) == 2 and not cycle_graph(5).has_edge(*s)

    def test_star(self):
        assert max_weight_independent_set(star_graph(4), [10, 1, 1, 1, 1]) == (0,)

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            max_weight_independent_set(empty_graph(41), [1] * 41)


def test_integer_weights_preserve_order():
    rng = random.Random(3)
    for _ in range(200):
        k = rng.randint(1, 6)
        w = [random_fraction(rng) for _ in range(k)]
        iw = canonical_integer_weights(w)
        subsets = [tuple(i for i in range(k) if mask >> i & 1) for mask in range(1 << k)]
        by_int = max(subsets, key=lambda s: sum(iw[i] for i in s))
        by_key = min(subsets, key=lambda s: (-sum((w[i] for i in s), F(0)), len(s), s))
        assert by_int == by_key


def _trials(count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 7)
        yield rng, random_graph(rng, n, rng.choice((0.3, 0.5, 0.8)))


def test_matching_against_enumeration():
    for rng, g in _trials(500, 101):
        w = [random_fraction(rng) for _ in g.edges]
        blossom = max_weight_matching(g, w)
        exhaustive = max_weight_matching(g, w, method="exhaustive")
        assert blossom.weight == brute_weighted_matching(g, w)
        assert blossom == exhaustive


def test_perfect_matching_against_enumeration():
    for rng, g in _trials(500, 202):
        w = [random_fraction(rng) for _ in g.edges]
        res = max_weight_perfect_matching(g, w)
        best = brute_perfect_matching(g, w)
        if best is None:
            assert res is None
        else:
            assert res.is_perfect and 2 * len(res.matching) == g.n and res.weight == best
            assert res == max_weight_perfect_matching(g, w, method="exhaustive")


def test_independent_set_against_enumeration():
    for rng, g in _trials(500, 303):
        w = [random_fraction(rng) for _ in g.vertices]
        s = max_weight_independent_set(g, w)
        assert sum((w[v] for v in s), F(0)) == brute_mwis(g, w)
        assert is_member(g, ProblemKind.INDEPENDENT_SET, s)


def test_price_oracles_minimise_over_family():
    for rng, g in _trials(500, 404):
        a_edges = [random_fraction(rng) for _ in g.edges]
        a_verts = [random_fraction(rng) for _ in g.vertices]
        m = price_matching_edges(g, a_edges)
        val = sum((a_edges[g.edge_index[e]] for e in m), F(0))
        assert val <= 0
        assert val == min(sum((a_edges[g.edge_index[e]] for e in mm), F(0)) for mm in all_matchings(g))
        vm = price_matching_vertices(g, a_verts)
        assert is_member(g, ProblemKind.MATCHING_VERTICES, vm)
        assert sum((a_verts[v] for v in vm), F(0)) == min(
            sum((a_verts[v] for v in covered(mm)), F(0)) for mm in all_matchings(g))
        s = price_independent_set(g, a_verts)
        assert sum((a_verts[v] for v in s), F(0)) == min(
            sum((a_verts[v] for v in ss), F(0)) for ss in all_independent_sets(g))
