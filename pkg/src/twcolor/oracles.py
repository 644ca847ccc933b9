"""Exhaustive reference computations: exact chromatic number and tree-width.

Both are exponential and guarded by the caps in :mod:`twcolor.config`.
"""

from __future__ import annotations

from .config import SizeError, get_caps
from .decomposition import TreeDecomposition
from .graph import Graph, bits


def _greedy_clique(g: Graph) -> int:
    best = 0
    masks = g.masks
    for start in sorted(g.vertices(), key=g.degree, reverse=True):
        clique = 1
        cand = masks[start]
        while cand:
            v = max(bits(cand), key=lambda u: (masks[u] & cand).bit_count())
            clique += 1
            cand &= masks[v]
        best = max(best, clique)
    return best


def is_k_colorable(g: Graph, k: int) -> dict[int, int] | None:
    """A proper coloring with colors ``1..k`` or ``None``; plain backtracking
    choosing the most saturated vertex first, new colors introduced in order."""
    n = g.n
    if n == 0:
        return {}
    if k <= 0:
        return None
    masks = g.masks
    color = [0] * n

    def saturation(v: int) -> int:
        return len({color[u] for u in bits(masks[v]) if color[u]})

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        v = max(
            (u for u in range(n) if not color[u]),
            key=lambda u: (saturation(u), g.degree(u)),
        )
        taken = {color[u] for u in bits(masks[v])}
        for c in range(1, min(used + 1, k) + 1):
            if c in taken:
                continue
            color[v] = c
            if rec(done + 1, max(used, c)):
                return True
            color[v] = 0
        return False

    if rec(0, 0):
        return {v: color[v] for v in range(n)}
    return None


def chromatic_number_exact(g: Graph, cap: int | None = None) -> int:
    """χ(g) by iterative deepening on the palette from a greedy clique bound."""
    cap = get_caps().chromatic if cap is None else cap
    if g.n > cap:
        raise SizeError(f"{g.n} vertices exceeds chromatic-number cap {cap}")
    if g.n == 0:
        return 0
    k = _greedy_clique(g)
    while is_k_colorable(g, k) is None:
        k += 1
    return k


def _q_size(masks: tuple[int, ...], s: int, v: int) -> int:
    # Vertices outside s ∪ {v} reachable from v through s.
    visited = frontier = 1 << v
    out = 0
    while frontier:
        reach = 0
        for u in bits(frontier):
            reach |= masks[u]
        reach &= ~visited
        visited |= reach
        out |= reach & ~s
        frontier = reach & s
    return out.bit_count()


def elimination_decomposition(g: Graph, order: list[int]) -> TreeDecomposition:
    """Tree decomposition from eliminating vertices in ``order`` (first eliminated first)."""
    if g.n == 0:
        return TreeDecomposition([frozenset()])
    position = {v: i for i, v in enumerate(order)}
    adj = [set(g.neighbors(v)) for v in g.vertices()]
    bags = []
    parent_vertex = []
    for v in order:
        higher = adj[v]
        bags.append(frozenset(higher | {v}))
        parent_vertex.append(min(higher, key=position.__getitem__) if higher else None)
        for a in higher:
            adj[a] |= higher - {a}
            adj[a].discard(v)
    edges = []
    roots = []
    for i, p in enumerate(parent_vertex):
        if p is None:
            roots.append(i)
        else:
            edges.append((i, position[p]))
    edges += [(roots[i], roots[i + 1]) for i in range(len(roots) - 1)]
    return TreeDecomposition(bags, edges)


def treewidth_exact(g: Graph, cap: int | None = None) -> tuple[int, TreeDecomposition]:
    """Exact tree-width and a witness decomposition of that width.

    Dynamic programming over vertex subsets ``S`` (the set eliminated so
    far): ``TW(S) = min_v max(TW(S - v), |Q(S - v, v)|)``.  The null graph
    gets tree-width 0.
    """
    cap = get_caps().treewidth if cap is None else cap
    n = g.n
    if n > cap:
        raise SizeError(f"{n} vertices exceeds tree-width cap {cap}")
    if n == 0:
        return 0, TreeDecomposition([frozenset()])
    masks = g.masks
    full = (1 << n) - 1
    best = [0] * (full + 1)
    choice = [0] * (full + 1)
    best[0] = -1
    for s in range(1, full + 1):
        value = n
        pick = -1
        for v in bits(s):
            rest = s & ~(1 << v)
            cand = best[rest]
            if cand >= value:
                continue
            q = _q_size(masks, rest, v)
            cand = max(cand, q)
            if cand < value:
                value, pick = cand, v
        best[s] = value
        choice[s] = pick
    order = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s &= ~(1 << v)
    order.reverse()
    td = elimination_decomposition(g, order)
    tw = max(best[full], 0)
    assert max(len(b) for b in td.bags) - 1 == best[full]
    return tw, td
