"""Greedy budget interdiction: doubling search over budget guesses plus a
best-ratio partial-cut scan per round, with a fast variant that reuses the
cuts computed on the input graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cuts import global_min_cut, min_st_cut
from .graph import Graph
from .mst import DisconnectedGraphError, is_connected, partial_cut, profit
from .quantities import ExtendedValue, checked_sum, finite, log2_bounds
from .solution import GreedyRound, GreedyTrace, InterdictionSolution, make_solution


class InfeasibleError(ValueError):
    """No affordable solution reaches the target increase."""


@dataclass(frozen=True)
class Candidate:
    """One (edge, W) scan result: a partial cut with its claimed gain."""

    gain: int  # W - w(defining edge), > 0 for admissible candidates
    cost: int  # cost of the realized cut edges
    edge: int  # defining edge index
    threshold: int  # W
    cut_edges: frozenset[int]
    side: frozenset[int]

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.gain, self.cost)


def _better(a: Candidate, b: Candidate | None) -> bool:
    """Strictly better ratio; ties by (cost, defining edge, threshold)."""
    if b is None:
        return True
    lhs = a.gain * b.cost
    rhs = b.gain * a.cost
    if lhs != rhs:
        return lhs > rhs
    return (a.cost, a.edge, a.threshold) < (b.cost, b.edge, b.threshold)


def _relaxed_budget_cap(n: int, budget: int) -> Fraction:
    # (1 + 2*log2 n) * budget with a conservative rational upper bound on
    # log2 n: allowing an extra round never breaks the cost analysis.
    _, ub = log2_bounds(n, bits=20)
    return (1 + 2 * ub) * budget


def _scan_live(
    g: Graph, alive: set[int], weights: list[int], budget: int
) -> Candidate | None:
    """Best-ratio admissible cut over all (live edge, weight) pairs."""
    best: Candidate | None = None
    for edge_idx in sorted(alive):
        e = g.edges[edge_idx]
        for w_threshold in weights:
            gain = w_threshold - e.weight
            if gain <= 0:
                continue
            cut = min_st_cut(
                g,
                e.u,
                e.v,
                lambda i, ed: i in alive and ed.weight < w_threshold,
            )
            if not cut.cost.is_finite:
                continue
            cost = cut.cost.units
            if not (0 < cost <= budget):
                continue
            cand = Candidate(gain, cost, edge_idx, w_threshold, cut.edges, cut.side)
            if _better(cand, best):
                best = cand
    return best


def _run_greedy(
    g: Graph, budget: int, delta: int, weights: list[int], scan
) -> tuple[frozenset[int], GreedyTrace]:
    if delta <= 0:
        raise ValueError("delta must be positive")
    alive = set(range(g.n_edges))
    removed: set[int] = set()
    spent = 0
    rounds: list[GreedyRound] = []
    cap = _relaxed_budget_cap(g.n_vertices, budget)
    outcome = "no_progress"
    while True:
        best = scan(alive, budget, spent)
        if best is not None:
            alive -= best.cut_edges
            removed |= best.cut_edges
            spent += best.cost
            current = profit(g, removed)
            rounds.append(
                GreedyRound(
                    partial_cut(g, best.side, best.threshold),
                    best.ratio,
                    spent,
                    current,
                )
            )
        current = profit(g, removed) if removed else finite(0)
        if current >= finite(delta):
            outcome = "reached_delta"
            break
        if best is None:
            outcome = "no_progress"
            break
        if not Fraction(spent) < cap:
            outcome = "budget_exhausted"
            break
    trace = GreedyTrace(tuple(rounds), budget, outcome)
    result = frozenset(removed) if outcome == "reached_delta" else frozenset()
    return result, trace


def greedy(g: Graph, budget: int, delta: int, weights: list[int]) -> frozenset[int]:
    """One run of the ratio-greedy at a fixed budget guess.

    Returns the removal set if it reaches the target profit, else the empty
    set (the in-band failure signal).
    """
    edges, _ = _run_greedy(
        g,
        budget,
        delta,
        weights,
        lambda alive, b, _spent: _scan_live(g, alive, weights, b),
    )
    return edges


def collect_candidate_cuts(g: Graph, weights: list[int]) -> list[Candidate]:
    """All (edge, W) cuts on the input graph: the fast variant's cut pool.

    Performs exactly len(weights) * n_edges min-cut computations.
    """
    pool = []
    for edge_idx in range(g.n_edges):
        e = g.edges[edge_idx]
        for w_threshold in weights:
            cut = min_st_cut(g, e.u, e.v, lambda i, ed: ed.weight < w_threshold)
            if not cut.cost.is_finite:
                continue
            gain = w_threshold - e.weight
            if gain <= 0 or not cut.edges:
                continue
            cost = cut.cost.units
            pool.append(
                Candidate(gain, cost, edge_idx, w_threshold, cut.edges, cut.side)
            )
    return pool


def _scan_pool(
    g: Graph, pool: list[Candidate], alive: set[int], budget: int
) -> Candidate | None:
    """Re-score stored cuts against the surviving edges."""
    best: Candidate | None = None
    for cand in pool:
        if cand.edge not in alive:
            continue  # cut was created using an already removed edge
        surviving = cand.cut_edges & alive
        if not surviving:
            continue
        cost = checked_sum(g.edges[i].cost for i in surviving)
        if not (0 < cost <= budget):
            continue
        scored = Candidate(
            cand.gain, cost, cand.edge, cand.threshold, frozenset(surviving), cand.side
        )
        if _better(scored, best):
            best = scored
    return best


def _global_cut_candidate(g: Graph) -> tuple[int, frozenset[int]] | None:
    cut = global_min_cut(g)
    if not cut.cost.is_finite or not cut.edges:
        return None
    return cut.cost.units, cut.edges


def _doubling(g: Graph, delta: int, run) -> tuple[frozenset[int], GreedyTrace] | None:
    finite_costs = [e.cost for e in g.edges if e.cost is not None]
    if not finite_costs:
        return None
    budget = min(finite_costs)
    total = checked_sum(finite_costs)
    while True:
        edges, trace = run(budget)
        if edges:
            return edges, trace
        if budget >= total:
            return None
        budget *= 2


def _finish(
    g: Graph, greedy_result: tuple[frozenset[int], GreedyTrace] | None
) -> InterdictionSolution:
    fallback = _global_cut_candidate(g)
    if greedy_result is not None:
        edges, trace = greedy_result
        cost = checked_sum(g.edges[i].cost for i in edges)
        if fallback is None or cost <= fallback[0]:
            return make_solution(
                g, edges, cuts=tuple(r.cut for r in trace.rounds), trace=trace
            )
    if fallback is None:
        raise InfeasibleError("target increase is unreachable at finite cost")
    return make_solution(g, fallback[1])


def budget_approximate(g: Graph, delta: int) -> InterdictionSolution:
    """Cheapest-found edge set with profit >= delta, within O(log n) of OPT."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")
    weights = g.distinct_weights()

    def run(budget: int):
        return _run_greedy(
            g,
            budget,
            delta,
            weights,
            lambda alive, b, _spent: _scan_live(g, alive, weights, b),
        )

    return _finish(g, _doubling(g, delta, run))


def budget_approximate_fast(g: Graph, delta: int) -> InterdictionSolution:
    """Same contract as budget_approximate; cuts are computed once on g."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")
    weights = g.distinct_weights()
    pool = collect_candidate_cuts(g, weights)

    def run(budget: int):
        return _run_greedy(
            g,
            budget,
            delta,
            weights,
            lambda alive, b, _spent: _scan_pool(g, pool, alive, b),
        )

    return _finish(g, _doubling(g, delta, run))


def reduce_budget_range(g: Graph, delta: int) -> tuple[int, int]:
    """Cost range [b*, m*b*] that must contain the optimal budget."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")
    target = finite(delta)
    for b in sorted({e.cost for e in g.edges if e.cost is not None}):
        removed = {i for i, e in enumerate(g.edges) if e.cost is not None and e.cost <= b}
        if profit(g, removed) >= target:
            return b, b * g.n_edges
    raise InfeasibleError("target increase is unreachable at finite cost")
