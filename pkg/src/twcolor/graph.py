"""Finite simple undirected graphs over dense integer ids ``0..n-1``.

Vertex sets are passed around as ordinary Python sets/frozensets; internally
the heavier routines switch to bitmasks (``1 << v``) for speed.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from typing import Dict

from .config import SizeError, get_caps

Coloring = Dict[int, int]


class InputError(ValueError):
    """Malformed argument: vertex out of range, missing color, bad parameter."""


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable once built; use :meth:`from_edges` or
    :meth:`with_edges` to obtain new graphs.
    """

    __slots__ = ("n", "_adj", "_masks")

    def __init__(self, n: int, adjacency: Iterable[Iterable[int]] | None = None):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        self.n = n
        if adjacency is None:
            adj = [frozenset() for _ in range(n)]
        else:
            adj = [frozenset(a) for a in adjacency]
            if len(adj) != n:
                raise InputError(f"adjacency has {len(adj)} rows, expected {n}")
        for v, nbrs in enumerate(adj):
            for u in nbrs:
                if not 0 <= u < n:
                    raise InputError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise InputError(f"self-loop at {v}")
                if v not in adj[u]:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")
        self._adj = tuple(adj)
        self._masks = tuple(to_mask(a) for a in adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    # Common small graphs used throughout tests and demos.
    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)) if n >= 3 else ())

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    def with_edges(self, edges: Iterable[tuple[int, int]], n: int | None = None) -> "Graph":
        """Copy of this graph, optionally grown to ``n`` vertices, plus ``edges``."""
        n = self.n if n is None else n
        if n < self.n:
            raise InputError("cannot shrink a graph with with_edges")
        return Graph.from_edges(n, list(self.edges()) + list(edges))

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adj[v]

    def mask(self, v: int) -> int:
        """Neighborhood of ``v`` as a bitmask."""
        return self._masks[v]

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def induced_edges(self, s: Iterable[int]) -> list[tuple[int, int]]:
        s = set(s)
        return [(u, v) for u, v in self.edges() if u in s and v in s]

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")

    def check_vertices(self, s: Iterable[int]) -> None:
        for v in s:
            self._check(v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    """True iff no edge of ``g`` has both endpoints in ``s``."""
    s = list(s)
    g.check_vertices(s)
    mask = to_mask(s)
    return all(not (g.mask(v) & mask) for v in s)


def is_clique_free(g: Graph, k: int) -> bool:
    """True iff ``g`` has no clique on ``k`` vertices (``k=3``: triangle-free)."""
    if k < 2:
        raise InputError("k must be at least 2")
    masks = g.masks

    def grow(candidates: int, need: int) -> bool:
        # True if a clique of size `need` exists inside `candidates`.
        if need == 0:
            return True
        if candidates.bit_count() < need:
            return False
        for v in bits(candidates):
            candidates &= ~(1 << v)
            if grow(candidates & masks[v], need - 1):
                return True
        return False

    return not grow((1 << g.n) - 1, k)


def independent_masks(g: Graph, within: int) -> Iterator[int]:
    """Independent subsets of the bitmask ``within``, as bitmasks (empty set first)."""
    verts = list(bits(within))
    masks = g.masks

    def rec(i: int, chosen: int, allowed: int) -> Iterator[int]:
        if i == len(verts):
            yield chosen
            return
        yield from rec(i + 1, chosen, allowed)
        v = verts[i]
        if allowed >> v & 1:
            yield from rec(i + 1, chosen | (1 << v), allowed & ~masks[v])

    yield from rec(0, 0, within)


def enumerate_independent_sets(
    g: Graph, within: Iterable[int] | None = None, cap: int | None = None
) -> list[frozenset[int]]:
    """All independent subsets of ``within`` (default: all of ``V(g)``).

    Raises :class:`SizeError` when ``|within|`` exceeds the subset cap.
    """
    within = list(range(g.n)) if within is None else list(within)
    g.check_vertices(within)
    cap = get_caps().subsets if cap is None else cap
    if len(set(within)) > cap:
        raise SizeError(f"{len(set(within))} vertices exceeds subset cap {cap}")
    return [frozenset(bits(m)) for m in independent_masks(g, to_mask(within))]


def is_proper(g: Graph, c: Mapping[int, int]) -> bool:
    """True iff the total coloring ``c`` leaves no edge monochromatic."""
    for v in g.vertices():
        if v not in c:
            raise InputError(f"vertex {v} is uncolored")
    return all(c[u] != c[v] for u, v in g.edges())


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph relabeled to ``0..k-1`` in ascending order, plus the old-to-new map."""
    keep = sorted(set(vertices))
    g.check_vertices(keep)
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.induced_edges(keep)]
    return Graph.from_edges(len(keep), edges), index
