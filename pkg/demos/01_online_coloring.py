"""
Coloring a triangle-free graph online
=====================================

A graph of tree-width ``t`` is revealed one vertex at a time along a nice
path decomposition.  The triangle-free rule keeps every bag free of rainbow
independent sets and so never needs more than ``ceil((t + 3) / 2)`` colors.
"""

from twcolor import (
    FirstFit,
    Graph,
    PathDecomposition,
    TriangleFreeColoring,
    make_nice,
    palette_size,
    run_online,
)

# The five-cycle has a width-2 path decomposition with three bags.
c5 = Graph.cycle(5)
pd = PathDecomposition([{0, 1, 2}, {0, 2, 3}, {0, 3, 4}])

# Online algorithms want one new vertex per step.
npd = make_nice(pd, c5)
print("reveal order:", npd.introduced)
for bag in npd.bags:
    print("  bag", sorted(bag))

coloring, used = run_online(TriangleFreeColoring(t=2), c5, npd)
print("triangle-free rule:", coloring, "colors:", used, "palette:", palette_size(2))

coloring, used = run_online(FirstFit(), c5, npd)
print("first-fit:         ", coloring, "colors:", used)
