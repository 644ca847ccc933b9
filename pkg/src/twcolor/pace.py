"""PACE 2017 ``.gr`` / ``.td`` text formats (1-indexed on disk, 0-indexed in memory)."""

from __future__ import annotations

import warnings

from .decomposition import TreeDecomposition
from .graph import Graph


class PaceSyntaxError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PaceWarning(UserWarning):
    """Declared header values disagree with the file's contents."""


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("c"):
            yield number, line.split()


def _ints(fields, number):
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise PaceSyntaxError(f"expected integers, got {' '.join(fields)!r}", number) from None


def read_pace_gr(text: str) -> Graph:
    n = m = None
    edges = []
    for number, fields in _lines(text):
        if fields[0] == "p":
            if n is not None:
                raise PaceSyntaxError("duplicate problem line", number)
            if len(fields) != 4 or fields[1] != "tw":
                raise PaceSyntaxError("problem line must read 'p tw <n> <m>'", number)
            n, m = _ints(fields[2:], number)
            continue
        if n is None:
            raise PaceSyntaxError("edge before problem line", number)
        if len(fields) != 2:
            raise PaceSyntaxError("edge line must hold two vertices", number)
        u, v = _ints(fields, number)
        if not (1 <= u <= n and 1 <= v <= n):
            raise PaceSyntaxError(f"vertex out of range 1..{n}", number)
        if u == v:
            raise PaceSyntaxError("self-loop", number)
        edges.append((u - 1, v - 1))
    if n is None:
        raise PaceSyntaxError("missing problem line")
    g = Graph.from_edges(n, edges)
    if g.m != m:
        warnings.warn(f"header declares {m} edges, file has {g.m}", PaceWarning, stacklevel=2)
    return g


def write_pace_gr(g: Graph) -> str:
    lines = [f"p tw {g.n} {g.m}"]
    lines += [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_pace_td(text: str) -> TreeDecomposition:
    """Parse a ``.td`` file; see :func:`read_pace_td_header` for the vertex count."""
    td, _ = _read_td(text)
    return td


def read_pace_td_header(text: str) -> tuple[TreeDecomposition, int]:
    """Like :func:`read_pace_td` but also return the declared vertex count."""
    return _read_td(text)


def _read_td(text: str) -> tuple[TreeDecomposition, int]:
    header = None
    bags: dict[int, frozenset[int]] = {}
    edges = []
    for number, fields in _lines(text):
        if fields[0] == "s":
            if header is not None:
                raise PaceSyntaxError("duplicate solution line", number)
            if len(fields) != 5 or fields[1] != "td":
                raise PaceSyntaxError("solution line must read 's td <bags> <width+1> <n>'", number)
            header = _ints(fields[2:], number)
            continue
        if header is None:
            raise PaceSyntaxError("content before solution line", number)
        nbags, _, n = header
        if fields[0] == "b":
            vals = _ints(fields[1:], number)
            if not vals:
                raise PaceSyntaxError("bag line without id", number)
            bag_id, verts = vals[0], vals[1:]
            if not 1 <= bag_id <= nbags:
                raise PaceSyntaxError(f"bag id {bag_id} out of range 1..{nbags}", number)
            if bag_id - 1 in bags:
                raise PaceSyntaxError(f"bag {bag_id} defined twice", number)
            for v in verts:
                if not 1 <= v <= n:
                    raise PaceSyntaxError(f"vertex {v} out of range 1..{n}", number)
            bags[bag_id - 1] = frozenset(v - 1 for v in verts)
            continue
        if len(fields) != 2:
            raise PaceSyntaxError("tree edge line must hold two bag ids", number)
        a, b = _ints(fields, number)
        for x in (a, b):
            if not 1 <= x <= nbags:
                raise PaceSyntaxError(f"bag id {x} out of range 1..{nbags}", number)
        edges.append((a - 1, b - 1))
    if header is None:
        raise PaceSyntaxError("missing solution line")
    nbags, declared, n = header
    missing = [i + 1 for i in range(nbags) if i not in bags]
    if missing:
        raise PaceSyntaxError(f"bags {missing} never defined")
    td = TreeDecomposition([bags[i] for i in range(nbags)], edges)
    actual = max((len(b) for b in td.bags), default=0)
    if actual != declared:
        warnings.warn(
            f"header declares max bag size {declared}, largest bag has {actual}",
            PaceWarning,
            stacklevel=3,
        )
    return td, n


def write_pace_td(td: TreeDecomposition, n: int | None = None) -> str:
    """Serialize ``td``; ``n`` defaults to one more than the largest vertex seen."""
    td = td.to_tree_decomposition()
    if n is None:
        n = max((max(b) + 1 for b in td.bags if b), default=0)
    size = max((len(b) for b in td.bags), default=0)
    lines = [f"s td {len(td.bags)} {size} {n}"]
    for i, bag in enumerate(td.bags, start=1):
        lines.append(" ".join(["b", str(i)] + [str(v + 1) for v in sorted(bag)]))
    lines += [f"{a + 1} {b + 1}" for a, b in td.edges]
    return "\n".join(lines) + "\n"
