import random
from fractions import Fraction

import pytest

from conftest import connected_random_subset
from mstint.generators import gen_random
from mstint.graph import Edge, Graph
from mstint.mst import DisconnectedGraphError, mst, profit
from mstint.quantities import finite, log2_bounds
from mstint.relaxation import build_cc_graph, build_cut_sequence, certify


def test_cc_graph_t3_single_removal(t3):
    cc = build_cc_graph(t3, frozenset({0}))
    assert cc.components == (frozenset({0}), frozenset({1, 2}))
    assert cc.t == 2
    assert cc.edges == (2,)  # only e2 survives between components


def test_cc_graph_t3_empty_removal(t3):
    cc = build_cc_graph(t3, frozenset())
    assert cc.t == 1
    cert = build_cut_sequence(t3, frozenset())
    assert cert.cuts == ()
    assert certify(t3, frozenset(), cert)["ok"]


def test_cc_graph_path_middle_edge():
    g = Graph(
        4,
        (
            Edge(0, 1, 1_000_000, 1_000_000),
            Edge(1, 2, 1_000_000, 1_000_000),
            Edge(2, 3, 1_000_000, 1_000_000),
            Edge(0, 3, 2_000_000, 1_000_000),
        ),
    )
    cc = build_cc_graph(g, frozenset({1}))
    assert set(cc.components) == {frozenset({0, 1}), frozenset({2, 3})}


def test_cc_graph_rejects_disconnecting_removal(t3):
    with pytest.raises(DisconnectedGraphError):
        build_cc_graph(t3, frozenset({0, 1}))


def test_t3_certificate_hand_values(t3):
    removed = frozenset({0})
    cert = build_cut_sequence(t3, removed)
    assert cert.tree_prime_edges == (2,)
    (cut,) = cert.cuts
    assert cut.side == frozenset({0})
    assert cut.threshold == 3_000_000
    assert cut.edges == frozenset({0})
    assert cert.matching == (0,)
    assert cert.cost_sum == 1_000_000
    assert cert.profit_lb_sum == 2_000_000
    assert cert.profit_value == finite(2_000_000)
    report = certify(t3, removed, cert)
    assert report["ok"], report


def test_t2_single_cut_is_trivially_laminar():
    for seed in range(10):
        g = gen_random(seed, 6, 10, 5, 5)
        tree = mst(g)
        removed = frozenset({min(tree.edges)})
        if not profit(g, removed).is_finite:
            continue
        cert = build_cut_sequence(g, removed)
        assert len(cert.cuts) == 1
        assert certify(g, removed, cert)["ok"]


def test_all_checks_on_random_pairs():
    checked = 0
    for seed in range(150):
        g = gen_random(seed, 5 + seed % 5, 8 + seed % 7, 5, 5)
        removed = connected_random_subset(g, random.Random(seed ^ 0xC0FFEE))
        cert = build_cut_sequence(g, removed)
        report = certify(g, removed, cert)
        assert report["ok"], (seed, report)
        checked += 1
    assert checked == 150


def test_cost_bound_is_the_certified_inequality():
    # spot-check the exact rational inequality the certifier evaluates
    g = gen_random(11, 8, 14, 5, 5)
    removed = connected_random_subset(g, random.Random(11))
    cert = build_cut_sequence(g, removed)
    t = len(cert.small_sides_cc) + 1
    if t > 1:
        lo, _ = log2_bounds(t)
        assert Fraction(cert.cost_sum) <= 2 * cert.solution_cost * lo


def test_determinism():
    g = gen_random(23, 7, 12, 5, 5)
    removed = connected_random_subset(g, random.Random(23))
    assert build_cut_sequence(g, removed) == build_cut_sequence(g, removed)


def test_matching_profit_identity_is_exact():
    for seed in range(40):
        g = gen_random(seed, 6, 11, 5, 5)
        removed = connected_random_subset(g, random.Random(seed + 77))
        cert = build_cut_sequence(g, removed)
        assert cert.profit_value.is_finite
        assert cert.profit_lb_sum == cert.profit_value.units
