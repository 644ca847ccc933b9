"""Offline coloring of a graph given with a tree decomposition, using any
deterministic online algorithm.

The decomposition is rooted under an empty bag and normalized so every node
introduces one vertex.  Each root-leaf path is then a nice path
decomposition; walking the tree depth-first and forking the algorithm at
branch nodes colors every path at once, and determinism makes the paths
agree on their shared prefixes.
"""

from __future__ import annotations

from typing import Callable

from .decomposition import AnyDecomposition, normalize_rooted, root_leaf_paths
from .graph import Coloring, Graph, is_proper
from .online import ContractViolation, OnlineAlgorithm, RevealStep, run_online


def color_via_tree_decomposition(
    alg_factory: Callable[[], OnlineAlgorithm],
    g: Graph,
    td: AnyDecomposition,
    verify_paths: bool = False,
) -> Coloring:
    """Color all of ``g`` by running fresh ``alg_factory()`` states down ``td``.

    With ``verify_paths`` every root-leaf path is additionally replayed from
    scratch and must reproduce the colors found by the tree walk.
    """
    rntd = normalize_rooted(td, g)
    children = rntd.children_table()
    coloring: Coloring = {}
    introduced_at: dict[int, int] = {}

    stack: list[tuple[int, OnlineAlgorithm]] = [(rntd.root, alg_factory())]
    while stack:
        node, state = stack.pop()
        kids = children[node]
        # Fork for every child but the first, which continues with `state`.
        branches = [(kids[0], state)] + [(c, state.fork()) for c in kids[1:]] if kids else []
        for child, branch in reversed(branches):
            v = rntd.introduced(child)
            if v in introduced_at:
                raise ContractViolation(
                    f"vertex {v} introduced at nodes {introduced_at[v]} and {child}"
                )
            bag = rntd.bags[child]
            step = RevealStep(v, bag, g.neighbors(v) & bag)
            color = branch.choose(step)
            for u in step.neighbors:
                if coloring[u] == color:
                    raise ContractViolation(
                        f"node {child}: vertex {v} got color {color}, same as neighbor {u}"
                    )
            coloring[v] = color
            introduced_at[v] = child
            stack.append((child, branch))

    if len(coloring) != g.n or not is_proper(g, coloring):
        raise ContractViolation("tree walk did not produce a proper coloring of the whole graph")

    if verify_paths:
        for npd in root_leaf_paths(rntd):
            path_coloring, _ = run_online(alg_factory(), g, npd)
            for v, c in path_coloring.items():
                if coloring[v] != c:
                    raise ContractViolation(
                        f"vertex {v}: tree walk gave {coloring[v]}, standalone path run gave {c}"
                    )
    return coloring
