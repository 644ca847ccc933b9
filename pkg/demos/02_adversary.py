"""
Forcing many colors
===================

The adversary watches the algorithm's answers and builds the graph around
them.  For ``k = 3`` it forces ``ceil((t + 3) / 2)`` colors, which is
exactly what the triangle-free rule uses, so the bound is tight.  For larger
``k`` the forced count follows ``g(t, k)``.
"""

from twcolor import VICTIMS, build_kfree_adversary, forcing_bound, make_victim, width
from twcolor.graph import is_clique_free

print(" t  k  g(t,k)  " + "  ".join(f"{name:>10}" for name in sorted(VICTIMS)))
for k in (3, 4, 5):
    for t in range(0, 9, 2):
        forced = []
        for name in sorted(VICTIMS):
            result = build_kfree_adversary(t, k, make_victim(name, t, k, seed=1))
            assert is_clique_free(result.graph, k) and width(result.npd) <= t
            forced.append(result.colors_used)
        cells = "  ".join(f"{f:>10}" for f in forced)
        print(f"{t:>2} {k:>2} {forcing_bound(t, k):>7}  {cells}")
