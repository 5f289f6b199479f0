"""Interdiction solutions, greedy traces, and the machine-readable record."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph
from .mst import PartialCutSpec, profit
from .quantities import ExtendedValue, checked_sum, format_quantity


@dataclass(frozen=True)
class GreedyRound:
    cut: PartialCutSpec
    claimed_ratio: Fraction  # (W - w(e)) / c(C) for the chosen candidate
    cumulative_cost: int
    cumulative_profit: ExtendedValue


@dataclass(frozen=True)
class GreedyTrace:
    rounds: tuple[GreedyRound, ...]
    budget_guess: int
    outcome: str  # reached_delta | budget_exhausted | no_progress


@dataclass(frozen=True)
class InterdictionSolution:
    edges: frozenset[int]
    cost: int
    profit: ExtendedValue
    cuts: tuple[PartialCutSpec, ...] = ()
    trace: GreedyTrace | None = field(default=None, compare=False)


def make_solution(
    g: Graph,
    edges,
    cuts: tuple[PartialCutSpec, ...] = (),
    trace: GreedyTrace | None = None,
) -> InterdictionSolution:
    """Build a solution, recomputing cost and profit from scratch."""
    edge_set = frozenset(edges)
    for i in edge_set:
        if g.edges[i].cost is None:
            raise ValueError(f"edge {i} has infinite removal cost")
    cost = checked_sum(g.edges[i].cost for i in edge_set)
    return InterdictionSolution(edge_set, cost, profit(g, edge_set), cuts, trace)


def _cut_record(cut: PartialCutSpec) -> dict:
    return {
        "side_vertices": sorted(cut.side),
        "threshold": "inf" if cut.threshold is None else format_quantity(cut.threshold),
        "edge_indices": sorted(cut.edges),
    }


def solution_record(sol: InterdictionSolution) -> dict:
    return {
        "edges": sorted(sol.edges),
        "cost": format_quantity(sol.cost),
        "profit": str(sol.profit),
        "cuts": [_cut_record(c) for c in sol.cuts],
    }


def serialize_solution(sol: InterdictionSolution) -> str:
    return json.dumps(solution_record(sol), indent=None, sort_keys=True)
