"""Random triangle-free partial k-trees with matching tree decompositions."""

from __future__ import annotations

import random

from .decomposition import TreeDecomposition
from .graph import Graph, InputError


def gen_random_instance(
    t: int, n: int, edge_density: float, seed: int, shape: str = "tree"
) -> tuple[Graph, TreeDecomposition]:
    """Random triangle-free graph on ``n`` vertices with a decomposition of width ``<= t``.

    Bags form a random tree (``shape="path"`` always extends the newest bag);
    each new bag keeps ``t`` vertices of its parent and adds one.  Edges from
    the new vertex into its bag appear with probability ``edge_density``
    unless they would close a triangle.  The result depends only on the
    arguments.
    """
    if t < 1 or n < 1:
        raise InputError("need t >= 1 and n >= 1")
    if not 0.0 <= edge_density <= 1.0:
        raise InputError("edge_density must lie in [0, 1]")
    if shape not in ("tree", "path"):
        raise InputError(f"unknown shape {shape!r}")
    rng = random.Random(seed)
    adj: list[set[int]] = [set() for _ in range(n)]

    def maybe_join(u: int, v: int) -> None:
        if rng.random() < edge_density and not adj[u] & adj[v]:
            adj[u].add(v)
            adj[v].add(u)

    first = list(range(min(t + 1, n)))
    for i, v in enumerate(first):
        for u in first[:i]:
            maybe_join(u, v)
    bags = [frozenset(first)]
    edges = []
    for v in range(len(first), n):
        p = len(bags) - 1 if shape == "path" else rng.randrange(len(bags))
        parent = sorted(bags[p])
        kept = rng.sample(parent, min(t, len(parent)))
        for u in sorted(kept):
            maybe_join(u, v)
        bags.append(frozenset(kept) | {v})
        edges.append((p, len(bags) - 1))
    return Graph(n, adj), TreeDecomposition(bags, edges)
