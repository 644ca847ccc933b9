"""
Valid colorings and forbidden colors
====================================

A coloring with palette ``c'`` is *valid* when no independent set shows all
``c'`` colors.  A color is *forbidden* when some independent set shows all
the others; giving that color to a new non-adjacent vertex would complete a
rainbow set.  Valid colorings have at most ``max(n - c' + 2, 0)`` forbidden
colors, which is what leaves room for the online rule.
"""

import random

from twcolor import Graph, count_bound_check, forbidden_colors, is_valid_coloring

two_points = Graph(2)
report = forbidden_colors(two_points, {0: 1, 1: 2}, 3)
print("two isolated vertices colored 1, 2 with palette 3 -> forbidden", set(report.forbidden))
print("  witness for 3:", set(report.witness[3]))

rng = random.Random(0)
checked = 0
for _ in range(2000):
    n = rng.randint(1, 8)
    c = rng.randint(2, 5)
    g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
    phi = {}
    for v in range(n):
        free = [x for x in range(1, c + 1) if all(phi.get(u) != x for u in g.neighbors(v))]
        if not free:
            break
        phi[v] = rng.choice(free)
    if len(phi) == n and is_valid_coloring(g, phi, c):
        assert count_bound_check(g, phi, c)
        checked += 1
print(f"bound held on {checked} random valid colorings")
