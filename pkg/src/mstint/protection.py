"""Defense against the minimum-cost increase: list the optimal cuts and
cover them with buildable edges via greedy weighted set cover.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cuts import enumerate_min_st_cuts
from .eps import contracted_instance, eps_increase, next_distinct_weight
from .graph import Candidate, Edge, Graph
from .mst import DisconnectedGraphError, PartialCutSpec, is_connected, mst


class UncoverableCutError(ValueError):
    """Some optimal cut cannot be covered by any candidate edge."""


class CandidateInvariantError(ValueError):
    """A candidate edge would lower the MST weight when added."""


@dataclass(frozen=True)
class ProtectionInstance:
    base: Graph
    candidates: tuple[Candidate, ...]

    def __post_init__(self) -> None:
        base_weight = mst(self.base).weight
        for idx, c in enumerate(self.candidates):
            augmented = self.base.with_edges(
                [Edge(c.u, c.v, c.weight, c.removal_cost)]
            )
            if mst(augmented).weight != base_weight:
                raise CandidateInvariantError(
                    f"candidate {idx} reduces the MST weight"
                )

    def augmented(self, chosen) -> Graph:
        return self.base.with_edges(
            Edge(c.u, c.v, c.weight, c.removal_cost)
            for c in (self.candidates[i] for i in sorted(chosen))
        )


@dataclass(frozen=True)
class OptimalCutListing:
    cuts: tuple[PartialCutSpec, ...]
    optimal_cost: int
    complete: bool  # False if any per-tree-edge enumeration was truncated


def list_optimal_cuts(g: Graph) -> OptimalCutListing:
    """All optimal-cost cuts the minimum-increase algorithm considers.

    Enumerates minimum s-t cuts per tree edge (capped at 4*n^2 each) and
    keeps those matching the optimal increase cost, de-duplicated by
    realized edge set.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")
    optimum = eps_increase(g).cost
    cap = 4 * g.n_vertices * g.n_vertices
    complete = True
    by_edges: dict[frozenset[int], PartialCutSpec] = {}
    for tree_edge in sorted(mst(g).edges):
        inst = contracted_instance(g, tree_edge)
        cuts, truncated = enumerate_min_st_cuts(inst.aux, inst.s, inst.t, cap=cap)
        complete = complete and not truncated
        threshold = next_distinct_weight(g, g.edges[tree_edge].weight)
        for cut in cuts:
            if not cut.cost.is_finite or cut.cost.units != optimum:
                continue
            edges = frozenset(inst.orig_index[i] for i in cut.edges)
            if edges in by_edges:
                continue
            side = frozenset(
                v for v in range(g.n_vertices) if inst.vertex_class[v] in cut.side
            )
            by_edges[edges] = PartialCutSpec(side, threshold, edges)
    listed = tuple(sorted(by_edges.values(), key=lambda c: sorted(c.edges)))
    return OptimalCutListing(listed, optimum, complete)


def covers(candidate: Candidate, cut: PartialCutSpec) -> bool:
    """A new edge raises a cut's cost iff it would belong to the partial cut."""
    crosses = (candidate.u in cut.side) != (candidate.v in cut.side)
    return crosses and (cut.threshold is None or candidate.weight < cut.threshold)


def protect(inst: ProtectionInstance) -> tuple[frozenset[int], OptimalCutListing]:
    """Greedy weighted set cover of the optimal cuts by candidate edges.

    Returns the chosen candidate indices and the cut listing (whose
    `complete` flag qualifies the strict-increase guarantee).
    """
    listing = list_optimal_cuts(inst.base)
    coverage = [
        frozenset(
            i for i, cut in enumerate(listing.cuts) if covers(cand, cut)
        )
        for cand in inst.candidates
    ]
    covered_by_any = frozenset().union(*coverage) if coverage else frozenset()
    for i, cut in enumerate(listing.cuts):
        if i not in covered_by_any:
            raise UncoverableCutError(
                f"cut over side {sorted(cut.side)} (edges {sorted(cut.edges)}) "
                "is not coverable by any candidate"
            )

    uncovered = set(range(len(listing.cuts)))
    chosen: set[int] = set()
    while uncovered:
        best_idx = None
        best_new: frozenset[int] = frozenset()
        for idx, cand in enumerate(inst.candidates):
            if idx in chosen:
                continue
            new = coverage[idx] & uncovered
            if not new:
                continue
            if best_idx is None or cand.build_cost * len(best_new) < (
                inst.candidates[best_idx].build_cost * len(new)
            ):
                best_idx, best_new = idx, new
        assert best_idx is not None  # coverability was checked up front
        chosen.add(best_idx)
        uncovered -= best_new
    return frozenset(chosen), listing
