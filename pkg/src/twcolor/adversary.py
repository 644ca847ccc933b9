"""Adaptive adversaries that force online algorithms to use many colors.

:func:`extend_forcing` grows a graph so that the victim's coloring gains one
more rainbow vertex in an independent subset of the last bag, keeping the
graph triangle-free and the bags small.  :func:`build_forced` iterates it,
and :func:`build_kfree_adversary` stacks such gadgets recursively: each new
level is joined completely to the previous level's rainbow independent set,
so its colors must be fresh, and ``K_k``-freeness drops to ``K_{k-1}``
inside.  The number of colors forced equals :func:`forcing_bound`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from .decomposition import NicePathDecomposition, require_valid, width
from .graph import Coloring, Graph, InputError, is_clique_free, is_independent
from .online import ContractViolation, OnlineAlgorithm, RevealStep


class AdversaryError(AssertionError):
    """A construction guarantee failed to hold (a bug, or a misbehaving victim)."""


def forcing_bound(t: int, k: int) -> int:
    """``g(t, k)``: 1 when ``k == 2`` or ``t == 0``, otherwise
    ``ceil((t + 1) / 2) + g(floor((t - 1) / 2), k - 1)``."""
    if t < 0 or k < 2:
        raise InputError(f"g(t, k) needs t >= 0 and k >= 2, got t={t}, k={k}")
    total = 0
    while k > 2 and t > 0:
        total += (t + 2) // 2
        t = (t - 1) // 2
        k -= 1
    return total + 1


g = forcing_bound


def forced_colors_first_level(t: int) -> int:
    """``ceil((t + 1) / 2)``, the rainbow set size reached by :func:`build_forced`."""
    return (t + 2) // 2


@dataclass
class ForcingState:
    """Graph built so far, its reveal order, the victim's colors, and an
    ordered independent witness in the last bag carrying distinct colors.

    ``victim`` has been fed exactly this graph's reveal history and is
    advanced in place by further extensions.
    """

    graph: Graph
    npd: NicePathDecomposition
    coloring: Coloring
    witness: tuple[int, ...]
    victim: OnlineAlgorithm

    @classmethod
    def empty(cls, victim: OnlineAlgorithm) -> "ForcingState":
        return cls(Graph(0), NicePathDecomposition([frozenset()]), {}, (), victim)

    def check(self) -> None:
        """Raise :class:`AdversaryError` unless every state invariant holds."""
        require_valid(self.graph, self.npd)
        w = set(self.witness)
        if not is_independent(self.graph, w):
            raise AdversaryError(f"witness {self.witness} is not independent")
        if not w <= self.npd.bags[-1]:
            raise AdversaryError("witness is not inside the last bag")
        if len({self.coloring[v] for v in w}) != len(w):
            raise AdversaryError("witness colors are not pairwise distinct")


def _choose(victim: OnlineAlgorithm, step: RevealStep, coloring: Coloring) -> int:
    color = victim.choose(step)
    if not isinstance(color, int) or color < 1:
        raise ContractViolation(f"victim returned {color!r} for vertex {step.vertex}")
    for u in step.neighbors:
        if coloring[u] == color:
            raise ContractViolation(
                f"victim gave vertex {step.vertex} color {color}, same as neighbor {u}"
            )
    return color


def extend_forcing(state: ForcingState, c: int, check: bool = True) -> ForcingState:
    """Turn a ``c0``-forced state into a ``(c0 + 1)``-forced one, ``c0 < c``.

    New vertices ``x_1, x_2, ...`` arrive in bags holding the witness plus
    the new vertices so far; ``x_j`` is adjacent to the first ``j - 1``
    witness vertices.  When the victim reuses a witness color the witness is
    reordered so that color sits at position ``j``; the first fresh color
    ends the round.  A fresh color is certain by ``j = c0 + 1``.
    """
    order = list(state.witness)
    c0 = len(order)
    if c0 > c - 1:
        raise InputError(f"witness already has {c0} >= c = {c} vertices")
    if len(state.npd.bags) > 1 and width(state.npd) > 2 * c - 2:
        raise InputError(f"width {width(state.npd)} exceeds 2c - 2 = {2 * c - 2}")
    if check and not is_clique_free(state.graph, 3):
        raise InputError("forcing state must be triangle-free")

    coloring = dict(state.coloring)
    bags = list(state.npd.bags)
    edges = list(state.graph.edges())
    position = {coloring[v]: i for i, v in enumerate(order)}
    n = state.graph.n
    fresh: list[int] = []
    new_witness = None

    for j in range(c0 + 1):
        x = n + j
        neighbors = order[:j]
        bag = frozenset(order) | frozenset(fresh) | {x}
        color = _choose(state.victim, RevealStep(x, bag, neighbors), coloring)
        coloring[x] = color
        bags.append(bag)
        edges += [(u, x) for u in neighbors]
        fresh.append(x)
        m = position.get(color)
        if m is None:
            new_witness = fresh[:j] + order[j:] + [x]
            break
        # properness forces m >= j; move the matching witness vertex to slot j
        order[j], order[m] = order[m], order[j]
        position[coloring[order[j]]] = j
        position[coloring[order[m]]] = m

    if new_witness is None:
        raise AdversaryError("victim reused witness colors on a vertex adjacent to all of them")

    result = ForcingState(
        Graph.from_edges(n + len(fresh), edges),
        NicePathDecomposition(bags),
        coloring,
        tuple(new_witness),
        state.victim,
    )
    if check:
        result.check()
        if width(result.npd) > 2 * c - 2:
            raise AdversaryError(f"width {width(result.npd)} exceeds {2 * c - 2}")
        if max(len(b) for b in bags[len(state.npd.bags):]) > 2 * c0 + 1:
            raise AdversaryError("a new bag exceeds 2 c0 + 1 vertices")
        if not is_clique_free(result.graph, 3):
            raise AdversaryError("forcing step created a triangle")
    return result


def build_forced(t: int, victim: OnlineAlgorithm, check: bool = True) -> ForcingState:
    """Triangle-free graph of width ``<= t`` whose coloring by ``victim`` has a
    rainbow independent set of size ``ceil((t + 1) / 2)`` in the last bag."""
    if t < 0:
        raise InputError("t must be non-negative")
    c = forced_colors_first_level(t)
    state = ForcingState.empty(victim)
    while len(state.witness) < c:
        state = extend_forcing(state, c, check=check)
    return state


class JoinedVictim(OnlineAlgorithm):
    """Presents a second-level construction to a victim that has already
    seen the first level: every incoming vertex is shifted by ``offset``,
    its bag gains ``join``, and it becomes adjacent to all of ``join``."""

    def __init__(self, inner: OnlineAlgorithm, join: frozenset[int], offset: int):
        super().__init__()
        self.inner = inner
        self.join = frozenset(join)
        self.offset = offset
        self.name = f"joined({inner.name})"

    def choose(self, step: RevealStep) -> int:
        off = self.offset
        outer = RevealStep(
            step.vertex + off,
            frozenset(v + off for v in step.bag) | self.join,
            frozenset(v + off for v in step.neighbors) | self.join,
        )
        color = self.inner.choose(outer)
        self.colors[step.vertex] = color
        return color

    def fork(self) -> "JoinedVictim":
        return JoinedVictim(self.inner.fork(), self.join, self.offset)


class AdversaryResult(NamedTuple):
    graph: Graph
    npd: NicePathDecomposition
    coloring: Coloring

    @property
    def colors_used(self) -> int:
        return len(set(self.coloring.values()))


def build_kfree_adversary(
    t: int, k: int, victim: OnlineAlgorithm, check: bool = True
) -> AdversaryResult:
    """``K_k``-free graph with a nice path decomposition of width ``<= t`` on
    which ``victim`` uses at least ``g(t, k)`` colors.

    ``victim`` must be fresh; it is consumed by the construction.
    """
    if t < 0 or k < 2:
        raise InputError(f"need t >= 0 and k >= 2, got t={t}, k={k}")
    if k == 2 or t == 0:
        step = RevealStep(0, frozenset({0}), frozenset())
        color = _choose(victim, step, {})
        return AdversaryResult(Graph(1), NicePathDecomposition([(), (0,)]), {0: color})

    c1 = forced_colors_first_level(t)
    c2 = t - c1
    base = build_forced(t, victim, check=check)
    join = frozenset(base.witness)
    offset = base.graph.n
    inner = build_kfree_adversary(c2, k - 1, JoinedVictim(base.victim.fork(), join, offset), check)

    edges = list(base.graph.edges())
    edges += [(u + offset, v + offset) for u, v in inner.graph.edges()]
    edges += [(w, v + offset) for w in sorted(join) for v in inner.graph.vertices()]
    graph = Graph.from_edges(offset + inner.graph.n, edges)
    bags = list(base.npd.bags)
    bags += [frozenset(v + offset for v in b) | join for b in inner.npd.bags[1:]]
    coloring = dict(base.coloring)
    coloring.update({v + offset: c for v, c in inner.coloring.items()})
    result = AdversaryResult(graph, NicePathDecomposition(bags), coloring)

    if check:
        require_valid(graph, result.npd)
        if width(result.npd) > t:
            raise AdversaryError(f"width {width(result.npd)} exceeds {t}")
        if not is_clique_free(graph, k):
            raise AdversaryError(f"output contains K_{k}")
        top = {coloring[w] for w in join}
        below = {coloring[v + offset] for v in inner.graph.vertices()}
        if top & below:
            raise AdversaryError("colors on the join set reappear below it")
        if result.colors_used < forcing_bound(t, k):
            raise AdversaryError(
                f"victim used {result.colors_used} < g({t}, {k}) = {forcing_bound(t, k)} colors"
            )
    return result


def transcript(graph: Graph, npd: NicePathDecomposition, coloring: Coloring) -> list[dict]:
    """Reveal/response history; vertex ids are 1-indexed like the PACE files."""
    rows = []
    for i, v in enumerate(npd.introduced, start=1):
        bag = npd.bags[i]
        rows.append(
            {
                "step": i,
                "vertex": v + 1,
                "bag": sorted(u + 1 for u in bag),
                "neighbors": sorted(u + 1 for u in graph.neighbors(v) & bag),
                "color": coloring[v],
            }
        )
    return rows


def transcript_json(result: AdversaryResult) -> str:
    return json.dumps(transcript(*result), indent=1) + "\n"


def read_transcript(text: str) -> tuple[Graph, NicePathDecomposition, Coloring]:
    """Rebuild graph, reveal order and colors from :func:`transcript_json` output."""
    rows = json.loads(text)
    bags = [frozenset()]
    edges = []
    coloring = {}
    for expected, row in enumerate(rows, start=1):
        if row["step"] != expected:
            raise InputError(f"transcript step {row['step']} out of order")
        v = row["vertex"] - 1
        bags.append(frozenset(u - 1 for u in row["bag"]))
        edges += [(u - 1, v) for u in row["neighbors"]]
        coloring[v] = row["color"]
    n = max((v + 1 for v in coloring), default=0)
    return Graph.from_edges(n, edges), NicePathDecomposition(bags), coloring
