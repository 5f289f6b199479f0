import random

import pytest

from conftest import brute_min_st_cut_cost, brute_min_st_cut_sides
from mstint.cuts import (
    enumerate_min_st_cuts,
    global_min_cut,
    min_st_cut,
    mincut_call_count,
    reset_mincut_calls,
)
from mstint.generators import gen_random
from mstint.graph import Edge, Graph
from mstint.quantities import INFINITY, ZERO, finite


def test_t3_weight_filtered_cut(t3):
    cut = min_st_cut(t3, 0, 1, lambda i, e: e.weight < 2_000_000)
    assert cut.edges == frozenset({0})
    assert cut.cost == finite(1_000_000)


def test_t3_unfiltered_cut(t3):
    cut = min_st_cut(t3, 0, 1)
    assert cut.cost == finite(2_000_000)
    # side-canonical: one of the two brute-force minimum sides
    assert cut.side in brute_min_st_cut_sides(t3, 0, 1, range(3))


def test_t3_empty_filter_is_zero_cut(t3):
    cut = min_st_cut(t3, 0, 2, lambda i, e: e.weight < 1_000_000)
    assert cut.edges == frozenset()
    assert cut.cost == ZERO


def test_infinite_cost_edges_are_uncuttable():
    g = Graph(2, (Edge(0, 1, 0, None),))
    assert min_st_cut(g, 0, 1).cost == INFINITY


def test_global_min_cut_t3(t3):
    assert global_min_cut(t3).cost == finite(2_000_000)


def test_global_min_cut_p2(p2):
    cut = global_min_cut(p2)
    assert cut.edges == frozenset({0})
    assert cut.cost == finite(3_000_000)


def test_global_min_cut_raised_parallel_cost(t3):
    g = Graph(3, t3.edges[:2] + (Edge(0, 2, 3_000_000, 10_000_000),))
    cut = global_min_cut(g)
    assert cut.cost == finite(2_000_000)
    assert cut.edges == frozenset({0, 1})


def test_min_cut_matches_bruteforce_random():
    for seed in range(40):
        g = gen_random(seed, 6, 10, 5, 5)
        s, t = 0, 1 + seed % (g.n_vertices - 1)
        cut = min_st_cut(g, s, t)
        assert cut.cost == brute_min_st_cut_cost(g, s, t, range(g.n_edges))


def test_min_cut_matches_bruteforce_with_inf_edges():
    rng = random.Random(7)
    for seed in range(20):
        g = gen_random(seed, 5, 8, 4, 4)
        edges = tuple(
            Edge(e.u, e.v, e.weight, None if rng.random() < 0.25 else e.cost)
            for e in g.edges
        )
        g = Graph(g.n_vertices, edges)
        cut = min_st_cut(g, 0, g.n_vertices - 1)
        assert cut.cost == brute_min_st_cut_cost(
            g, 0, g.n_vertices - 1, range(g.n_edges)
        )


def test_enumerate_t3(t3):
    cuts, truncated = enumerate_min_st_cuts(t3, 0, 1, cap=10)
    assert not truncated
    assert len(cuts) == 2
    assert {c.side for c in cuts} == brute_min_st_cut_sides(t3, 0, 1, range(3))
    assert all(c.cost == finite(2_000_000) for c in cuts)


def test_enumerate_p2(p2):
    cuts, truncated = enumerate_min_st_cuts(p2, 0, 1, cap=10)
    assert not truncated
    assert [c.edges for c in cuts] == [frozenset({0})]


def test_enumerate_cap_truncation(t3):
    cuts, truncated = enumerate_min_st_cuts(t3, 0, 1, cap=1)
    assert truncated
    assert len(cuts) == 1


def test_enumerate_matches_bruteforce_random():
    for seed in range(25):
        g = gen_random(seed, 6, 9, 4, 4)
        cuts, truncated = enumerate_min_st_cuts(g, 0, g.n_vertices - 1, cap=1 << 16)
        assert not truncated
        expected = brute_min_st_cut_sides(g, 0, g.n_vertices - 1, range(g.n_edges))
        assert {c.side for c in cuts} == expected


def test_call_counter():
    reset_mincut_calls()
    g = gen_random(3, 5, 7, 3, 3)
    min_st_cut(g, 0, 1)
    min_st_cut(g, 0, 2)
    assert mincut_call_count() == 2


def test_s_equals_t_rejected(t3):
    with pytest.raises(ValueError):
        min_st_cut(t3, 1, 1)
    with pytest.raises(ValueError):
        enumerate_min_st_cuts(t3, 1, 1)
