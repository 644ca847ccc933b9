"""Tree and path decompositions, their validation, and the one-vertex-per-step
("nice") normal forms used to drive online coloring.

Width is ``max |bag| - 1`` throughout, so a single bag holding ``K_{t+1}``
has width ``t``.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Optional, Union

from .graph import Graph, InputError



class DecompositionError(ValueError):
    """A decomposition failed validation or a structural invariant."""

    def __init__(self, message: str, report: "ValidationReport | None" = None):
        super().__init__(message)
        self.report = report


def _bags(bags: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    return tuple(frozenset(b) for b in bags)


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed by node id ``0..len(bags)-1`` plus undirected tree edges."""

    bags: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __init__(self, bags: Iterable[Iterable[int]], edges: Iterable[tuple[int, int]] = ()):
        object.__setattr__(self, "bags", _bags(bags))
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in edges))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.bags]
        for a, b in self.edges:
            if 0 <= a < len(adj) and 0 <= b < len(adj):
                adj[a].append(b)
                adj[b].append(a)
        return adj

    def to_tree_decomposition(self) -> "TreeDecomposition":
        return self


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    def __init__(self, bags: Iterable[Iterable[int]]):
        object.__setattr__(self, "bags", _bags(bags))

    def to_tree_decomposition(self) -> TreeDecomposition:
        return TreeDecomposition(self.bags, ((i, i + 1) for i in range(len(self.bags) - 1)))


@dataclass(frozen=True)
class NicePathDecomposition(PathDecomposition):
    """Path decomposition with ``bags[0]`` empty and exactly one new vertex
    per later bag.  Vertices may leave at the same step one enters.

    ``introduced[i]`` is the vertex new in ``bags[i + 1]``.
    """

    introduced: tuple[int, ...] = field(default=(), compare=False)

    def __init__(self, bags: Iterable[Iterable[int]]):
        super().__init__(bags)
        bags = self.bags
        if not bags or bags[0]:
            raise DecompositionError("a nice path decomposition starts with an empty bag")
        introduced = []
        for i in range(1, len(bags)):
            new = bags[i] - bags[i - 1]
            if len(new) != 1:
                raise DecompositionError(
                    f"bag {i} introduces {len(new)} vertices, expected exactly one"
                )
            introduced.append(next(iter(new)))
        if len(set(introduced)) != len(introduced):
            raise DecompositionError("a vertex is introduced twice")
        object.__setattr__(self, "introduced", tuple(introduced))

    def __len__(self) -> int:
        return len(self.introduced)

    def prefix(self, steps: int) -> "NicePathDecomposition":
        return NicePathDecomposition(self.bags[: steps + 1])


@dataclass(frozen=True)
class RootedNiceTreeDecomposition:
    """Rooted tree of bags; the root bag is empty and every other node adds
    exactly one vertex to its parent's bag."""

    bags: tuple[frozenset[int], ...]
    parent: tuple[Optional[int], ...]
    root: int

    def __init__(self, bags: Iterable[Iterable[int]], parent: Iterable[Optional[int]], root: int):
        object.__setattr__(self, "bags", _bags(bags))
        object.__setattr__(self, "parent", tuple(parent))
        object.__setattr__(self, "root", root)
        if len(self.parent) != len(self.bags):
            raise DecompositionError("parent table and bag table differ in length")
        if self.parent[root] is not None or self.bags[root]:
            raise DecompositionError("root must have no parent and an empty bag")
        for z, p in enumerate(self.parent):
            if z == root:
                continue
            if p is None:
                raise DecompositionError(f"node {z} has no parent but is not the root")
            if len(self.bags[z] - self.bags[p]) != 1:
                raise DecompositionError(f"node {z} does not introduce exactly one vertex")

    def introduced(self, z: int) -> Optional[int]:
        p = self.parent[z]
        if p is None:
            return None
        return next(iter(self.bags[z] - self.bags[p]))

    def children(self, z: int) -> list[int]:
        """Children of ``z`` ordered by ascending introduced vertex."""
        kids = [c for c, p in enumerate(self.parent) if p == z]
        return sorted(kids, key=lambda c: self.introduced(c))

    def children_table(self) -> list[list[int]]:
        table: list[list[int]] = [[] for _ in self.bags]
        for c, p in enumerate(self.parent):
            if p is not None:
                table[p].append(c)
        for kids in table:
            kids.sort(key=lambda c: self.introduced(c))
        return table

    def leaves(self) -> list[int]:
        table = self.children_table()
        return [z for z in range(len(self.bags)) if not table[z]]

    def to_tree_decomposition(self) -> TreeDecomposition:
        edges = [(p, z) for z, p in enumerate(self.parent) if p is not None]
        return TreeDecomposition(self.bags, edges)


AnyDecomposition = Union[
    TreeDecomposition, PathDecomposition, NicePathDecomposition, RootedNiceTreeDecomposition
]


@dataclass
class ValidationReport:
    """Outcome of checking a decomposition against a host graph.

    Each condition carries a flag and, on failure, a concrete witness.
    """

    tree_ok: bool = True
    tree_problem: Optional[str] = None
    vertices_ok: bool = True
    unknown_vertex: Optional[int] = None
    coverage_ok: bool = True
    uncovered_edge: Optional[tuple[int, int]] = None
    connectivity_ok: bool = True
    disconnected_vertex: Optional[int] = None
    missing_vertex: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.tree_ok and self.vertices_ok and self.coverage_ok and self.connectivity_ok

    def __bool__(self) -> bool:
        return self.ok

    def problems(self) -> list[str]:
        out = []
        if not self.tree_ok:
            out.append(f"tree shape: {self.tree_problem}")
        if not self.vertices_ok:
            out.append(f"bag vertex {self.unknown_vertex} is not a vertex of the graph")
        if not self.coverage_ok:
            u, v = self.uncovered_edge
            out.append(f"edge ({u}, {v}) lies in no bag")
        if not self.connectivity_ok:
            if self.missing_vertex is not None:
                out.append(f"vertex {self.missing_vertex} occurs in no bag")
            else:
                out.append(f"occurrences of vertex {self.disconnected_vertex} are disconnected")
        return out


def _tree_problem(td: TreeDecomposition) -> Optional[str]:
    nodes = len(td.bags)
    if nodes == 0:
        return "no nodes"
    seen_edges = set()
    for a, b in td.edges:
        if not (0 <= a < nodes and 0 <= b < nodes):
            return f"edge ({a}, {b}) references a missing node"
        if a == b:
            return f"loop at node {a}"
        key = (min(a, b), max(a, b))
        if key in seen_edges:
            return f"duplicate edge {key}"
        seen_edges.add(key)
    if len(td.edges) != nodes - 1:
        return f"{len(td.edges)} edges on {nodes} nodes"
    adj = td.adjacency()
    seen = {0}
    queue = deque([0])
    while queue:
        z = queue.popleft()
        for y in adj[z]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != nodes:
        return "not connected"
    return None


def validate(g: Graph, td: AnyDecomposition) -> ValidationReport:
    """Check tree shape, edge coverage and per-vertex subtree connectivity."""
    td = td.to_tree_decomposition()
    report = ValidationReport()

    problem = _tree_problem(td)
    if problem is not None:
        report.tree_ok = False
        report.tree_problem = problem

    for bag in td.bags:
        for v in sorted(bag):
            if not 0 <= v < g.n:
                report.vertices_ok = False
                report.unknown_vertex = v
                break
        if not report.vertices_ok:
            break

    occurrences: list[list[int]] = [[] for _ in range(g.n)]
    for z, bag in enumerate(td.bags):
        for v in bag:
            if 0 <= v < g.n:
                occurrences[v].append(z)

    for u, v in g.edges():
        if not any(u in bag and v in bag for bag in td.bags):
            report.coverage_ok = False
            report.uncovered_edge = (u, v)
            break

    adj = td.adjacency()
    for v in g.vertices():
        occ = occurrences[v]
        if not occ:
            report.connectivity_ok = False
            report.missing_vertex = v
            break
        inside = set(occ)
        seen = {occ[0]}
        queue = deque([occ[0]])
        while queue:
            z = queue.popleft()
            for y in adj[z]:
                if y in inside and y not in seen:
                    seen.add(y)
                    queue.append(y)
        if len(seen) != len(inside):
            report.connectivity_ok = False
            report.disconnected_vertex = v
            break
    return report


def require_valid(g: Graph, td: AnyDecomposition) -> None:
    report = validate(g, td)
    if not report.ok:
        raise DecompositionError("; ".join(report.problems()), report)


def width(td: AnyDecomposition) -> int:
    """Largest bag size minus one (``-1`` for a lone empty bag)."""
    if not td.bags:
        raise InputError("decomposition has no bags")
    return max(len(b) for b in td.bags) - 1


def assert_nice_path(npd: NicePathDecomposition, g: Optional[Graph] = None) -> None:
    """Re-check every nice-path invariant, and validity against ``g`` if given."""
    NicePathDecomposition(npd.bags)  # re-runs the structural checks
    if g is not None:
        require_valid(g, npd)


def _occurrences_contiguous(bags: Sequence[frozenset[int]]) -> Optional[int]:
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, bag in enumerate(bags):
        for v in bag:
            first.setdefault(v, i)
            last[v] = i
    for v in first:
        if any(v not in bags[i] for i in range(first[v], last[v] + 1)):
            return v
    return None


def make_nice(pd: PathDecomposition, graph: Optional[Graph] = None) -> NicePathDecomposition:
    """Rewrite ``pd`` so bags start empty and grow by one vertex per step.

    Multi-vertex introductions are split in ascending vertex order; bags that
    only forget vertices are absorbed.  The width does not change.  Without
    ``graph`` only the path-shape conditions are checked.
    """
    if graph is not None:
        require_valid(graph, pd)
    else:
        bad = _occurrences_contiguous(pd.bags)
        if bad is not None:
            raise DecompositionError(f"occurrences of vertex {bad} are not contiguous")
    out: list[frozenset[int]] = [frozenset()]
    for bag in pd.bags:
        prev = out[-1]
        new = sorted(bag - prev)
        kept = prev & bag
        for u in new:
            kept = kept | {u}
            out.append(frozenset(kept))
    return NicePathDecomposition(out)


def _pick_root(td: TreeDecomposition) -> int:
    for z, bag in enumerate(td.bags):
        if not bag:
            return z
    return 0


def normalize_rooted(
    td: AnyDecomposition, graph: Optional[Graph] = None, root: Optional[int] = None
) -> RootedNiceTreeDecomposition:
    """Root ``td`` under a fresh empty bag and make each node introduce one vertex.

    Nodes introducing nothing are merged into their parent (their children
    move up); nodes introducing several vertices become a chain, one vertex
    per node in ascending order, each intermediate bag being
    ``(parent ∩ child) ∪ introduced-so-far``.
    """
    td = td.to_tree_decomposition()
    if graph is not None:
        require_valid(graph, td)
    else:
        problem = _tree_problem(td)
        if problem is not None:
            raise DecompositionError(f"tree shape: {problem}")
    start = _pick_root(td) if root is None else root
    adj = td.adjacency()

    bags: list[frozenset[int]] = [frozenset()]
    parent: list[Optional[int]] = [None]
    # (original node, original parent node or None, output node to hang under)
    stack: list[tuple[int, Optional[int], int]] = [(start, None, 0)]
    while stack:
        z, zparent, anchor = stack.pop()
        anchor_bag = bags[anchor]
        bag = td.bags[z]
        new = sorted(bag - anchor_bag)
        if new:
            kept = anchor_bag & bag
            for u in new:
                kept = kept | {u}
                bags.append(frozenset(kept))
                parent.append(anchor)
                anchor = len(bags) - 1
        for y in sorted(adj[z], reverse=True):
            if y != zparent:
                stack.append((y, z, anchor))
    return RootedNiceTreeDecomposition(bags, parent, 0)


def root_leaf_paths(rntd: RootedNiceTreeDecomposition) -> list[NicePathDecomposition]:
    """One nice path decomposition per leaf, following bags from the root."""
    out = []
    for leaf in sorted(rntd.leaves(), key=lambda z: _path_key(rntd, z)):
        chain = []
        z: Optional[int] = leaf
        while z is not None:
            chain.append(rntd.bags[z])
            z = rntd.parent[z]
        out.append(NicePathDecomposition(reversed(chain)))
    return out


def _path_key(rntd: RootedNiceTreeDecomposition, z: int) -> tuple:
    intro = []
    node: Optional[int] = z
    while node is not None and rntd.parent[node] is not None:
        intro.append(rntd.introduced(node))
        node = rntd.parent[node]
    return tuple(reversed(intro))
