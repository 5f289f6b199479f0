"""Minimum s-t cuts, global minimum cut, and bounded min-cut enumeration.

Cuts are always taken with respect to edge removal COSTS; a filter predicate
decides which edges participate at all.  Infinity-cost edges are modeled as
uncuttable (capacity above any finite cut).  The returned cut is canonical:
the source side is the residual-reachability set after a maximum flow, which
is the unique source-side-minimal minimum cut.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable

from .graph import Edge, Graph
from .quantities import INFINITY, ExtendedValue, ZERO, checked_sum, finite

EdgeFilter = Callable[[int, Edge], bool]

# Instrumentation: number of min_st_cut invocations (runtime-shape tests).
_mincut_calls = 0


def mincut_call_count() -> int:
    return _mincut_calls


def reset_mincut_calls() -> None:
    global _mincut_calls
    _mincut_calls = 0


@dataclass(frozen=True)
class CutResult:
    side: frozenset[int]  # contains s
    edges: frozenset[int]  # participating edges crossing the side
    cost: ExtendedValue


class _FlowNet:
    """Dinic max-flow on an undirected multigraph."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_undirected(self, u: int, v: int, capacity: int) -> None:
        # one residual arc pair; both directions start with full capacity
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(capacity)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(capacity)

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for a in self.head[u]:
                    v = self.to[a]
                    if self.cap[a] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] < 0:
                return flow
            it = [0] * self.n

            def dfs(u: int, pushed: int) -> int:
                if u == t:
                    return pushed
                while it[u] < len(self.head[u]):
                    a = self.head[u][it[u]]
                    v = self.to[a]
                    if self.cap[a] > 0 and level[v] == level[u] + 1:
                        got = dfs(v, min(pushed, self.cap[a]))
                        if got > 0:
                            self.cap[a] -= got
                            self.cap[a ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while True:
                pushed = dfs(s, 1 << 200)
                if pushed == 0:
                    break
                flow += pushed

    def residual_reachable(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for a in self.head[u]:
                v = self.to[a]
                if self.cap[a] > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen


def _build_net(
    g: Graph, edge_filter: EdgeFilter | None
) -> tuple[_FlowNet, list[int], int]:
    participating = [
        i
        for i, e in enumerate(g.edges)
        if edge_filter is None or edge_filter(i, e)
    ]
    big = checked_sum(g.edges[i].cost for i in participating if g.edges[i].cost is not None) + 1
    net = _FlowNet(g.n_vertices)
    for i in participating:
        e = g.edges[i]
        net.add_undirected(e.u, e.v, big if e.cost is None else e.cost)
    return net, participating, big


def _cut_of_side(g: Graph, participating: list[int], side: set[int]) -> CutResult:
    crossing = [i for i in participating if (g.edges[i].u in side) != (g.edges[i].v in side)]
    if any(g.edges[i].cost is None for i in crossing):
        cost = INFINITY
    else:
        cost = finite(checked_sum(g.edges[i].cost for i in crossing)) if crossing else ZERO
    return CutResult(frozenset(side), frozenset(crossing), cost)


def min_st_cut(
    g: Graph, s: int, t: int, edge_filter: EdgeFilter | None = None
) -> CutResult:
    """Minimum-cost cut separating s from t over the participating edges."""
    global _mincut_calls
    if s == t:
        raise ValueError("s and t must differ")
    _mincut_calls += 1
    net, participating, big = _build_net(g, edge_filter)
    flow = net.max_flow(s, t)
    side = net.residual_reachable(s)
    result = _cut_of_side(g, participating, side)
    # strong duality check: flow value must equal the cut cost
    if result.cost.is_finite:
        assert flow == result.cost.units, "max-flow / min-cut mismatch"
    else:
        assert flow >= big, "infinite cut with sub-threshold flow"
    return result


def global_min_cut(g: Graph) -> CutResult:
    """Minimum-cost complete cut, via n-1 s-t computations from vertex 0."""
    if g.n_vertices < 2:
        raise ValueError("global min cut needs at least two vertices")
    best: CutResult | None = None
    for t in range(1, g.n_vertices):
        cut = min_st_cut(g, 0, t)
        if not cut.edges and cut.cost == ZERO and len(cut.side) < g.n_vertices:
            # 0 and t already disconnected: the component split is a zero cut
            return cut
        if best is None or cut.cost < best.cost:
            best = cut
    assert best is not None
    return best


def _free_closed_sets(order: list[int], succ: dict[int, set[int]], limit: int):
    """Yield subsets of SCC ids closed under residual successors.

    `order` is topological (successors after predecessors is NOT required;
    we process sinks first so every branch is viable).
    """
    results: list[frozenset[int]] = []

    def rec(idx: int, chosen: set[int]) -> bool:
        if len(results) > limit:
            return False
        if idx == len(order):
            results.append(frozenset(chosen))
            return len(results) <= limit
        node = order[idx]
        # out
        if not rec(idx + 1, chosen):
            return False
        # in, only if all successors already in
        if succ[node] <= chosen:
            chosen.add(node)
            ok = rec(idx + 1, chosen)
            chosen.discard(node)
            if not ok:
                return False
        return True

    rec(0, set())
    return results


def enumerate_min_st_cuts(
    g: Graph,
    s: int,
    t: int,
    edge_filter: EdgeFilter | None = None,
    cap: int = 1 << 30,
) -> tuple[list[CutResult], bool]:
    """Distinct minimum s-t cuts from the residual closed-set structure.

    Returns at most `cap` cuts plus a flag telling whether more exist.
    """
    global _mincut_calls
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if s == t:
        raise ValueError("s and t must differ")
    _mincut_calls += 1
    net, participating, _big = _build_net(g, edge_filter)
    net.max_flow(s, t)

    n = g.n_vertices
    adj = [[] for _ in range(n)]
    radj = [[] for _ in range(n)]
    for u in range(n):
        for a in net.head[u]:
            if net.cap[a] > 0:
                adj[u].append(net.to[a])
                radj[net.to[a]].append(u)

    forced_in = net.residual_reachable(s)
    # vertices that can reach t in the residual graph are forced out
    reach_t = {t}
    stack = [t]
    while stack:
        u = stack.pop()
        for v in radj[u]:
            if v not in reach_t:
                reach_t.add(v)
                stack.append(v)
    free = [v for v in range(n) if v not in forced_in and v not in reach_t]

    # condense residual SCCs among the free vertices
    index = {v: i for i, v in enumerate(free)}
    comp = _scc([ [index[w] for w in adj[v] if w in index] for v in free ])
    n_comp = (max(comp) + 1) if comp else 0
    members: list[list[int]] = [[] for _ in range(n_comp)]
    for v, c in zip(free, comp):
        members[c].append(v)
    succ: dict[int, set[int]] = {c: set() for c in range(n_comp)}
    for v in free:
        for w in adj[v]:
            if w in index and comp[index[w]] != comp[index[v]]:
                succ[comp[index[v]]].add(comp[index[w]])

    closed = _free_closed_sets(list(range(n_comp)), succ, cap)
    truncated = len(closed) > cap
    cuts = []
    for chosen in closed[:cap]:
        side = set(forced_in)
        for c in chosen:
            side.update(members[c])
        cuts.append(_cut_of_side(g, participating, side))
    costs = {c.cost for c in cuts}
    assert len(costs) == 1, "enumerated cuts must share the minimum cost"
    cuts.sort(key=lambda c: sorted(c.side))
    return cuts, truncated


def _scc(adj: list[list[int]]) -> list[int]:
    """Tarjan SCC, iterative; returns component id per node."""
    n = len(adj)
    comp = [-1] * n
    low = [0] * n
    num = [0] * n
    on = [False] * n
    stack: list[int] = []
    counter = 0
    comps = 0
    for root in range(n):
        if comp[root] != -1 or num[root]:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                counter += 1
                num[v] = low[v] = counter
                stack.append(v)
                on[v] = True
            recurse = False
            for i in range(pi, len(adj[v])):
                w = adj[v][i]
                if num[w] == 0:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                elif on[w]:
                    low[v] = min(low[v], num[w])
            if recurse:
                continue
            if low[v] == num[v]:
                while True:
                    w = stack.pop()
                    on[w] = False
                    comp[w] = comps
                    if w == v:
                        break
                comps += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comp
