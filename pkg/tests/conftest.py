import itertools

import pytest
from hypothesis import strategies as st

from twcolor.graph import Graph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_line():
    def record(number: int, ok: bool, detail: str) -> None:
        ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, max_n: int = 8):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


# Independent reference implementations, kept deliberately naive.

def brute_independent_sets(g: Graph, within):
    within = sorted(within)
    out = []
    for r in range(len(within) + 1):
        for s in itertools.combinations(within, r):
            if all(not g.has_edge(a, b) for a, b in itertools.combinations(s, 2)):
                out.append(frozenset(s))
    return out


def brute_chromatic(g: Graph) -> int:
    edges = list(g.edges())
    for k in range(g.n + 1):
        for c in itertools.product(range(k), repeat=g.n):
            if all(c[a] != c[b] for a, b in edges):
                return k
    raise AssertionError("unreachable")


def brute_treewidth(g: Graph) -> int:
    # min over elimination orders of the max number of later neighbors
    best = g.n
    for order in itertools.permutations(range(g.n)):
        adj = {v: set(g.neighbors(v)) for v in g.vertices()}
        w = 0
        for v in order:
            higher = adj.pop(v)
            w = max(w, len(higher))
            for a in higher:
                adj[a] |= higher - {a}
                adj[a].discard(v)
        best = min(best, w)
    return best if g.n else 0
