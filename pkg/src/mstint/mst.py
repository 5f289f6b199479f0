"""Minimum spanning trees, the profit function, and partial-cut primitives."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Iterable

from .graph import Graph
from .quantities import INFINITY, ExtendedValue, checked_sum, finite


class DisconnectedGraphError(ValueError):
    """An operation that presumes a connected graph got a disconnected one."""


@dataclass(frozen=True)
class SpanningForest:
    edges: frozenset[int]
    weight: ExtendedValue  # infinite iff the graph is disconnected


@dataclass(frozen=True)
class PartialCutSpec:
    """A partial cut: side S, weight threshold W, and its realized edges.

    threshold=None is the complete-cut sentinel (no weight restriction).
    """

    side: frozenset[int]
    threshold: int | None
    edges: frozenset[int]


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def mst(g: Graph, exclude: Collection[int] = ()) -> SpanningForest:
    """Deterministic minimum spanning forest of g minus `exclude`.

    Kruskal over edges sorted by (weight, index); ties always resolve to the
    lower edge index, so repeated calls agree edge-for-edge.
    """
    banned = frozenset(exclude)
    order = sorted(
        (i for i in range(g.n_edges) if i not in banned),
        key=lambda i: (g.edges[i].weight, i),
    )
    uf = UnionFind(g.n_vertices)
    chosen = []
    for i in order:
        e = g.edges[i]
        if uf.union(e.u, e.v):
            chosen.append(i)
            if len(chosen) == g.n_vertices - 1:
                break
    if len(chosen) < g.n_vertices - 1:
        return SpanningForest(frozenset(chosen), INFINITY)
    weight = finite(checked_sum(g.edges[i].weight for i in chosen))
    return SpanningForest(frozenset(chosen), weight)


def is_connected(g: Graph, exclude: Collection[int] = ()) -> bool:
    return mst(g, exclude).weight.is_finite or g.n_vertices == 1


def profit(g: Graph, removed: Collection[int]) -> ExtendedValue:
    """MST(G \\ F) - MST(G); infinite iff F disconnects g."""
    base = mst(g)
    if not base.weight.is_finite and g.n_vertices > 1:
        raise DisconnectedGraphError("profit is undefined on a disconnected graph")
    if g.n_vertices == 1:
        return finite(0)
    return mst(g, removed).weight - base.weight


def partial_cut(g: Graph, side: Iterable[int], threshold: int | None) -> PartialCutSpec:
    """Edges with exactly one endpoint in `side` and weight strictly < W."""
    s = frozenset(side)
    if not s or len(s) >= g.n_vertices:
        raise ValueError("cut side must be a nonempty proper vertex subset")
    edges = frozenset(
        i
        for i, e in enumerate(g.edges)
        if ((e.u in s) != (e.v in s)) and (threshold is None or e.weight < threshold)
    )
    return PartialCutSpec(s, threshold, edges)


def tree_cut(g: Graph, forest: SpanningForest, tree_edge: int) -> frozenset[int]:
    """Vertex side of the unique cut crossing exactly one tree edge.

    Returns the component of T minus the edge that contains the edge's
    lower-indexed endpoint.
    """
    if tree_edge not in forest.edges:
        raise ValueError("edge is not part of the spanning forest")
    adj: dict[int, list[int]] = {v: [] for v in range(g.n_vertices)}
    for i in forest.edges:
        if i == tree_edge:
            continue
        e = g.edges[i]
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    start = min(g.edges[tree_edge].u, g.edges[tree_edge].v)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return frozenset(seen)


def cut_profit_lower_bound(g: Graph, cut: PartialCutSpec, edge: int) -> ExtendedValue:
    """Guaranteed profit of removing the partial cut: max(0, W - w(e)).

    `edge` must cross the complete cut over the same side (any weight).  A
    complete cut (threshold None) disconnects, so its bound is infinite.
    """
    e = g.edges[edge]
    if (e.u in cut.side) == (e.v in cut.side):
        raise ValueError("edge does not cross the cut")
    if cut.threshold is None:
        return INFINITY
    return finite(max(0, cut.threshold - e.weight))
