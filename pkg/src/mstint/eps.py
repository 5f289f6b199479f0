"""Exact minimum-cost interdiction that increases the MST weight at all.

For each MST edge e = {u, v}: contract every edge lighter than e, drop every
edge heavier than e, and take the cheapest cut separating the contracted
images of u and v.  The cheapest cut over all tree edges is optimal.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cuts import min_st_cut
from .graph import Edge, Graph
from .mst import DisconnectedGraphError, PartialCutSpec, UnionFind, mst, partial_cut
from .quantities import INFINITY
from .solution import InterdictionSolution, make_solution


class NoFiniteCutError(ValueError):
    """Every candidate cut costs infinity; no affordable increase exists."""


@dataclass(frozen=True)
class ContractedInstance:
    """Auxiliary graph for one tree edge, with a map back to g."""

    aux: Graph
    orig_index: tuple[int, ...]  # aux edge index -> original edge index
    vertex_class: tuple[int, ...]  # original vertex -> aux vertex
    s: int
    t: int


def contracted_instance(g: Graph, tree_edge: int) -> ContractedInstance:
    pivot = g.edges[tree_edge]
    uf = UnionFind(g.n_vertices)
    for e in g.edges:
        if e.weight < pivot.weight:
            uf.union(e.u, e.v)
    roots = sorted({uf.find(v) for v in range(g.n_vertices)})
    relabel = {r: i for i, r in enumerate(roots)}
    vertex_class = tuple(relabel[uf.find(v)] for v in range(g.n_vertices))

    aux_edges = []
    orig_index = []
    for i, e in enumerate(g.edges):
        if e.weight > pivot.weight:
            continue
        cu, cv = vertex_class[e.u], vertex_class[e.v]
        if cu == cv:
            continue  # contracted into a self-loop
        aux_edges.append(Edge(cu, cv, e.weight, e.cost))
        orig_index.append(i)
    s, t = vertex_class[pivot.u], vertex_class[pivot.v]
    assert s != t, "an MST edge cannot be contracted away"
    return ContractedInstance(
        Graph(len(roots), tuple(aux_edges)), tuple(orig_index), vertex_class, s, t
    )


def next_distinct_weight(g: Graph, weight: int) -> int | None:
    """Smallest edge weight strictly above `weight`, or None."""
    above = [w for w in g.distinct_weights() if w > weight]
    return min(above) if above else None


def eps_increase(g: Graph) -> InterdictionSolution:
    """Cheapest edge set whose removal strictly increases the MST weight.

    Ties between tree edges break to the lower edge index.  The solution
    trace carries the chosen cut as a partial cut C(S, W') where W' is the
    next distinct weight above the pivot tree edge.
    """
    if g.n_vertices < 2:
        raise ValueError("need at least two vertices")
    tree = mst(g)
    if not tree.weight.is_finite:
        raise DisconnectedGraphError("graph is disconnected")

    best = None  # (cost, tree_edge, cut_spec, edge set)
    for tree_edge in sorted(tree.edges):
        inst = contracted_instance(g, tree_edge)
        cut = min_st_cut(inst.aux, inst.s, inst.t)
        if cut.cost == INFINITY:
            continue
        assert cut.cost.is_finite and cut.edges, "MST edge endpoints stay separable"
        if best is not None and cut.cost.units >= best[0]:
            continue
        edges = frozenset(inst.orig_index[i] for i in cut.edges)
        side = frozenset(
            v for v in range(g.n_vertices) if inst.vertex_class[v] in cut.side
        )
        threshold = next_distinct_weight(g, g.edges[tree_edge].weight)
        spec = partial_cut(g, side, threshold)
        assert spec.edges == edges, "contracted cut must realize a partial cut"
        best = (cut.cost.units, tree_edge, spec, edges)

    if best is None:
        raise NoFiniteCutError("every candidate cut has infinite cost")
    _, _, spec, edges = best
    return make_solution(g, edges, cuts=(spec,))
