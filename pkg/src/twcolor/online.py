"""Online coloring along nice path decompositions.

An online algorithm sees one :class:`RevealStep` at a time and must commit
to a color for the new vertex immediately.  This module provides the
contract, a first-fit baseline, a few other deterministic victims for the
adversary, and :class:`TriangleFreeColoring`, which colors triangle-free
inputs of width ``t`` with ``ceil((t + 3) / 2)`` colors by steering clear of
forbidden colors.
"""

from __future__ import annotations

import copy
import logging
import random
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from typing import Callable, Optional

from .decomposition import NicePathDecomposition
from .graph import Coloring, Graph, InputError, bits, independent_masks

log = logging.getLogger(__name__)


def palette_size(t: int) -> int:
    """``ceil((t + 3) / 2)``."""
    return (t + 4) // 2


@dataclass(frozen=True)
class RevealStep:
    """A new vertex, the bag it arrives in, and its neighbors in that bag."""

    vertex: int
    bag: frozenset[int]
    neighbors: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "bag", frozenset(self.bag))
        object.__setattr__(self, "neighbors", frozenset(self.neighbors))
        if self.vertex not in self.bag:
            raise InputError(f"vertex {self.vertex} missing from its bag")
        if self.vertex in self.neighbors or not self.neighbors <= self.bag:
            raise InputError("neighbors must lie in the bag and exclude the vertex")


def reveal_steps(g: Graph, npd: NicePathDecomposition) -> Iterator[RevealStep]:
    for i, v in enumerate(npd.introduced, start=1):
        bag = npd.bags[i]
        yield RevealStep(v, bag, g.neighbors(v) & bag)


class ContractViolation(RuntimeError):
    """An online algorithm returned an illegal color or behaved inconsistently."""


class NoQualifyingColorError(RuntimeError):
    """No palette color satisfies the triangle-free coloring rule.

    On a triangle-free input of the promised width this cannot happen; it
    usually means the input violates that hypothesis.  ``history`` is the
    full list of ``(step, color)`` pairs seen so far.
    """

    def __init__(self, message: str, step: RevealStep, history: list | None = None):
        super().__init__(message)
        self.step = step
        self.history = history or []


class InvariantViolation(AssertionError):
    pass


class OnlineAlgorithm:
    """Base class for deterministic online colorers.

    Subclasses implement :meth:`pick`; :meth:`choose` records the revealed
    edges and the committed color.  ``fork`` returns an independent copy.
    """

    name = "online"

    def __init__(self):
        self.colors: Coloring = {}
        self.adjacency: dict[int, set[int]] = {}
        self.history: list[tuple[RevealStep, int]] = []

    def pick(self, step: RevealStep) -> int:
        raise NotImplementedError

    def choose(self, step: RevealStep) -> int:
        if step.vertex in self.colors:
            raise ContractViolation(f"vertex {step.vertex} revealed twice")
        color = self.pick(step)
        self.colors[step.vertex] = color
        self.adjacency[step.vertex] = set(step.neighbors)
        for u in step.neighbors:
            self.adjacency.setdefault(u, set()).add(step.vertex)
        self.history.append((step, color))
        return color

    def fork(self) -> "OnlineAlgorithm":
        return copy.deepcopy(self)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name!r}>"


def first_fit_choose(step: RevealStep, phi: Mapping[int, int]) -> int:
    """Smallest positive color not used on the new vertex's neighbors."""
    taken = {phi[u] for u in step.neighbors}
    c = 1
    while c in taken:
        c += 1
    return c


class FirstFit(OnlineAlgorithm):
    name = "first-fit"

    def pick(self, step):
        return first_fit_choose(step, self.colors)


class LeastUsed(OnlineAlgorithm):
    """The least-used color so far among those free on the neighbors; a new
    color only when every used one is blocked."""

    name = "least-used"

    def __init__(self):
        super().__init__()
        self.counts: dict[int, int] = {}

    def pick(self, step):
        taken = {self.colors[u] for u in step.neighbors}
        options = [c for c in self.counts if c not in taken]
        if options:
            color = min(options, key=lambda c: (self.counts[c], c))
        else:
            color = first_fit_choose(step, self.colors)
        self.counts[color] = self.counts.get(color, 0) + 1
        return color


class SeededRandom(OnlineAlgorithm):
    """Uniform choice among free colors ``1..max+1``; deterministic given the seed."""

    name = "random"

    def __init__(self, seed: int = 0):
        super().__init__()
        self.rng = random.Random(seed)
        self.top = 0

    def pick(self, step):
        taken = {self.colors[u] for u in step.neighbors}
        options = [c for c in range(1, self.top + 2) if c not in taken]
        color = self.rng.choice(options)
        self.top = max(self.top, color)
        return color


# -- valid colorings and forbidden colors -----------------------------------


@dataclass(frozen=True)
class ForbiddenReport:
    palette_size: int
    forbidden: frozenset[int]
    witness: dict[int, frozenset[int]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.forbidden)


def _color_sets(masks: list[int], colors: list[int], palette: int) -> Iterator[tuple[int, int]]:
    """For each independent set of the local graph yield (set mask, palette colors it carries)."""
    local = _LocalGraph(masks)
    full = (1 << len(masks)) - 1
    keep = (1 << (palette + 1)) - 2
    for s in independent_masks(local, full):
        carried = 0
        for i in bits(s):
            carried |= 1 << colors[i]
        yield s, carried & keep


class _LocalGraph:
    # Just enough of the Graph interface for independent_masks.
    __slots__ = ("masks",)

    def __init__(self, masks):
        self.masks = masks


def _localize(vertices: list[int], adjacent: Callable[[int], Iterable[int]]) -> list[int]:
    index = {v: i for i, v in enumerate(vertices)}
    masks = []
    for v in vertices:
        m = 0
        for u in adjacent(v):
            j = index.get(u)
            if j is not None:
                m |= 1 << j
        masks.append(m)
    return masks


def _forbidden_local(
    vertices: list[int], masks: list[int], colors: list[int], palette: int
) -> tuple[bool, dict[int, frozenset[int]]]:
    """(valid?, forbidden color -> witness) for a coloring of a small graph."""
    full = (1 << (palette + 1)) - 2
    valid = True
    witness: dict[int, frozenset[int]] = {}
    for s, carried in _color_sets(masks, colors, palette):
        if carried == full:
            valid = False
            continue
        missing = full & ~carried
        if missing & (missing - 1) == 0:
            a = missing.bit_length() - 1
            if a not in witness:
                witness[a] = frozenset(vertices[i] for i in bits(s))
    return valid, witness


def _check_palette(f: Graph, phi: Mapping[int, int], c_prime: int) -> None:
    if c_prime < 1:
        raise InputError("palette size must be positive")
    for v in f.vertices():
        if v not in phi:
            raise InputError(f"vertex {v} is uncolored")
        if not 1 <= phi[v] <= c_prime:
            raise InputError(f"color {phi[v]} of vertex {v} outside palette 1..{c_prime}")


def _analyse(f: Graph, phi: Mapping[int, int], c_prime: int):
    _check_palette(f, phi, c_prime)
    vertices = list(f.vertices())
    colors = [phi[v] for v in vertices]
    return _forbidden_local(vertices, list(f.masks), colors, c_prime)


def is_valid_coloring(f: Graph, phi: Mapping[int, int], c_prime: int) -> bool:
    """True iff no independent set of ``f`` carries all ``c_prime`` colors."""
    return _analyse(f, phi, c_prime)[0]


def forbidden_colors(f: Graph, phi: Mapping[int, int], c_prime: int) -> ForbiddenReport:
    """Colors ``a`` such that some independent set carries every other color."""
    _, witness = _analyse(f, phi, c_prime)
    return ForbiddenReport(c_prime, frozenset(witness), witness)


def forbidden_bound(n: int, c_prime: int) -> int:
    return max(n - c_prime + 2, 0)


def count_bound_check(f: Graph, phi: Mapping[int, int], c_prime: int) -> bool:
    """Does a valid coloring have at most ``max(|V| - c' + 2, 0)`` forbidden colors?

    Invalid colorings make the check vacuous (returns ``True``, logged at
    debug level).  A ``False`` result is logged with the offending instance.
    """
    valid, witness = _analyse(f, phi, c_prime)
    if not valid:
        log.debug("count_bound_check on invalid coloring %s of %r: vacuous", dict(phi), f)
        return True
    ok = len(witness) <= forbidden_bound(f.n, c_prime)
    if not ok:
        log.error(
            "forbidden-count bound fails: n=%d c'=%d edges=%s phi=%s forbidden=%s",
            f.n, c_prime, list(f.edges()), dict(phi), sorted(witness),
        )
    return ok


def availability_bound(t: int, n_neighbors: int, c_prime: int) -> int:
    """Lower bound on the number of qualifying colors at a step."""
    return c_prime - min(n_neighbors, c_prime - 1) - max(t - n_neighbors - c_prime + 2, 0)


def qualifying_colors(
    step: RevealStep, phi: Mapping[int, int], adjacency: Mapping[int, Iterable[int]], c_prime: int
) -> list[int]:
    """Palette colors absent from the neighbors and not forbidden by the rest of the bag."""
    taken = {phi[u] for u in step.neighbors}
    rest = sorted(step.bag - step.neighbors - {step.vertex})
    masks = _localize(rest, lambda v: adjacency.get(v, ()))
    _, witness = _forbidden_local(rest, masks, [phi[v] for v in rest], c_prime)
    return [a for a in range(1, c_prime + 1) if a not in taken and a not in witness]


def paper_choose(
    step: RevealStep, phi: Mapping[int, int], t: int, adjacency: Mapping[int, Iterable[int]]
) -> int:
    """Smallest qualifying color in ``1..ceil((t+3)/2)``.

    ``adjacency`` must describe the edges among the already-revealed bag
    vertices.  Raises :class:`NoQualifyingColorError` if nothing qualifies.
    """
    if len(step.bag) > t + 1:
        raise InputError(f"bag of size {len(step.bag)} exceeds width {t}")
    options = qualifying_colors(step, phi, adjacency, palette_size(t))
    if not options:
        raise NoQualifyingColorError(
            f"no qualifying color for vertex {step.vertex} in bag {sorted(step.bag)}; "
            "the input is probably not triangle-free",
            step,
        )
    return options[0]


@dataclass
class AuditLog:
    """Per-step checks gathered across a run and all of its forks."""

    steps: int = 0
    min_slack: Optional[int] = None
    violations: list[str] = field(default_factory=list)

    def note(self, qualifying: int, formula: int) -> None:
        self.steps += 1
        slack = qualifying - max(1, formula)
        self.min_slack = slack if self.min_slack is None else min(self.min_slack, slack)


class TriangleFreeColoring(OnlineAlgorithm):
    """Online coloring with palette ``ceil((t + 3) / 2)`` for triangle-free
    graphs revealed along nice path decompositions of width at most ``t``.

    The restriction of the coloring to every bag is kept valid: no
    independent set in the bag sees the whole palette.  Each new vertex gets
    the smallest color that is free on its neighbors and not forbidden by the
    non-neighbors in the bag.

    With ``strict=False`` the algorithm falls back to first-fit (possibly
    leaving the palette) instead of raising when nothing qualifies; this is
    only meaningful on inputs outside the triangle-free hypothesis.

    ``audit`` takes an :class:`AuditLog` (or ``True``) and re-checks bag
    validity and the availability count after every step.
    """

    name = "paper"

    def __init__(self, t: int, strict: bool = True, audit: AuditLog | bool | None = None):
        super().__init__()
        if t < 0:
            raise InputError("t must be non-negative")
        self.t = t
        self.c_prime = palette_size(t)
        self.strict = strict
        self.audit = AuditLog() if audit is True else (audit or None)
        self.fallbacks = 0

    def fork(self):
        memo = {id(self.audit): self.audit} if self.audit is not None else {}
        return copy.deepcopy(self, memo)

    def pick(self, step):
        if len(step.bag) > self.t + 1:
            raise InputError(f"bag of size {len(step.bag)} exceeds width {self.t}")
        options = qualifying_colors(step, self.colors, self.adjacency, self.c_prime)
        if self.audit is not None:
            self._audit(step, options)
        if options:
            return options[0]
        if self.strict:
            raise NoQualifyingColorError(
                f"no qualifying color for vertex {step.vertex} in bag {sorted(step.bag)} "
                f"(t={self.t}); the input is probably not triangle-free",
                step,
                list(self.history),
            )
        self.fallbacks += 1
        return first_fit_choose(step, self.colors)

    def _audit(self, step: RevealStep, options: list[int]) -> None:
        formula = availability_bound(self.t, len(step.neighbors), self.c_prime)
        self.audit.note(len(options), formula)
        problems = []
        if len(options) < max(1, formula):
            problems.append(
                f"{len(options)} qualifying colors < max(1, {formula}) at vertex {step.vertex}"
            )
        old = sorted(step.bag - {step.vertex})
        if not self._bag_valid(old, self.colors):
            problems.append(f"bag {old} invalid before vertex {step.vertex}")
        if options:
            trial = dict(self.colors)
            trial[step.vertex] = options[0]
            adjacency = dict(self.adjacency)
            adjacency[step.vertex] = set(step.neighbors)
            if not self._bag_valid(sorted(step.bag), trial, adjacency, step):
                problems.append(f"bag {sorted(step.bag)} invalid after vertex {step.vertex}")
        if problems:
            self.audit.violations.extend(problems)
            if self.strict:
                raise InvariantViolation("; ".join(problems))

    def _bag_valid(self, vertices, colors, adjacency=None, step=None) -> bool:
        adjacency = self.adjacency if adjacency is None else adjacency

        def adjacent(v):
            # Reverse edges of the vertex being placed are not yet recorded.
            if step is not None and v in step.neighbors:
                return set(adjacency.get(v, ())) | {step.vertex}
            return adjacency.get(v, ())

        masks = _localize(vertices, adjacent)
        valid, _ = _forbidden_local(vertices, masks, [colors[v] for v in vertices], self.c_prime)
        return valid


def run_online(
    alg: OnlineAlgorithm, g: Graph, npd: NicePathDecomposition
) -> tuple[Coloring, int]:
    """Reveal ``g`` along ``npd``; return the coloring and the number of colors used."""
    coloring: Coloring = {}
    for i, step in enumerate(reveal_steps(g, npd), start=1):
        color = alg.choose(step)
        if not isinstance(color, int) or color < 1:
            raise ContractViolation(f"step {i}: color {color!r} is not a positive integer")
        clash = [u for u in step.neighbors if coloring[u] == color]
        if clash:
            raise ContractViolation(
                f"step {i}: vertex {step.vertex} got color {color}, same as neighbor {clash[0]}"
            )
        coloring[step.vertex] = color
    return coloring, len(set(coloring.values()))


# -- registry of victims ----------------------------------------------------

VictimFactory = Callable[..., OnlineAlgorithm]


def _paper_factory(t: int, k: int = 3, seed: int = 0, audit=None) -> OnlineAlgorithm:
    # Strict only inside the triangle-free hypothesis.
    return TriangleFreeColoring(t, strict=k <= 3, audit=audit)


VICTIMS: dict[str, VictimFactory] = {
    "first-fit": lambda t, k=3, seed=0, audit=None: FirstFit(),
    "paper": _paper_factory,
    "least-used": lambda t, k=3, seed=0, audit=None: LeastUsed(),
    "random": lambda t, k=3, seed=0, audit=None: SeededRandom(seed),
}


def make_victim(name: str, t: int, k: int = 3, seed: int = 0, audit=None) -> OnlineAlgorithm:
    """Instantiate a registered algorithm for width ``t`` and clique bound ``k``."""
    try:
        factory = VICTIMS[name]
    except KeyError:
        raise InputError(f"unknown algorithm {name!r}; known: {', '.join(VICTIMS)}") from None
    return factory(t, k=k, seed=seed, audit=audit)
