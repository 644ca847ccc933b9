"""
From online to offline
======================

Any deterministic online algorithm colors a whole graph given a tree
decomposition: root it under an empty bag, split it so each node adds one
vertex, and walk it depth-first, forking the algorithm at branch nodes.
"""

from twcolor import (
    TriangleFreeColoring,
    chromatic_number_exact,
    color_via_tree_decomposition,
    gen_random_instance,
    normalize_rooted,
    palette_size,
    root_leaf_paths,
    width,
)
from twcolor.graph import is_proper

for t in range(1, 6):
    g, td = gen_random_instance(t, n=14, edge_density=0.8, seed=t)
    paths = root_leaf_paths(normalize_rooted(td, g))
    coloring = color_via_tree_decomposition(
        lambda: TriangleFreeColoring(t), g, td, verify_paths=True
    )
    assert is_proper(g, coloring)
    print(
        f"t={t} width={width(td)} n={g.n} m={g.m} leaves={len(paths)} "
        f"colors={len(set(coloring.values()))} bound={palette_size(t)} "
        f"chi={chromatic_number_exact(g)}"
    )
