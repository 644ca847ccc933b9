import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from twcolor.decomposition import NicePathDecomposition, PathDecomposition, make_nice
from twcolor.graph import Graph, InputError, is_proper
from twcolor.online import (
    AuditLog,
    ContractViolation,
    FirstFit,
    LeastUsed,
    NoQualifyingColorError,
    OnlineAlgorithm,
    RevealStep,
    SeededRandom,
    TriangleFreeColoring,
    VICTIMS,
    availability_bound,
    count_bound_check,
    first_fit_choose,
    forbidden_colors,
    is_valid_coloring,
    make_victim,
    palette_size,
    paper_choose,
    reveal_steps,
    run_online,
)
from twcolor.oracles import chromatic_number_exact


def brute_forbidden(g: Graph, phi, c):
    palette = set(range(1, c + 1))
    out = set()
    for r in range(g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            if any(g.has_edge(a, b) for a, b in itertools.combinations(s, 2)):
                continue
            carried = {phi[v] for v in s}
            if len(palette - carried) == 1:
                out |= palette - carried
    return out


def brute_valid(g: Graph, phi, c):
    return not any(
        {phi[v] for v in s} >= set(range(1, c + 1))
        for r in range(g.n + 1)
        for s in itertools.combinations(range(g.n), r)
        if not any(g.has_edge(a, b) for a, b in itertools.combinations(s, 2))
    )


def test_palette_size():
    assert [palette_size(t) for t in range(1, 7)] == [2, 3, 3, 4, 4, 5]


def test_is_valid_coloring_examples():
    assert is_valid_coloring(Graph.complete(2), {0: 1, 1: 2}, 2)
    assert not is_valid_coloring(Graph(2), {0: 1, 1: 2}, 2)
    c5 = {0: 1, 1: 2, 2: 1, 3: 2, 4: 3}
    assert is_valid_coloring(Graph.cycle(5), c5, 3) == brute_valid(Graph.cycle(5), c5, 3) is True
    with pytest.raises(InputError):
        is_valid_coloring(Graph(1), {0: 4}, 3)


def test_forbidden_colors_examples():
    assert forbidden_colors(Graph(0), {}, 3).forbidden == frozenset()
    report = forbidden_colors(Graph(1), {0: 1}, 2)
    assert report.forbidden == {2} and report.witness[2] == {0}
    assert forbidden_colors(Graph(2), {0: 1, 1: 2}, 3).forbidden == {3}


def test_count_bound_check_examples():
    assert count_bound_check(Graph(1), {0: 1}, 2)
    assert count_bound_check(Graph(0), {}, 5)
    # invalid coloring: vacuous
    assert count_bound_check(Graph(2), {0: 1, 1: 2}, 2)


def test_paper_choose_examples():
    v, u, a, b = 9, 4, 1, 2
    assert paper_choose(RevealStep(v, {v}, ()), {}, 2, {}) == 1
    assert paper_choose(RevealStep(v, {u, v}, {u}), {u: 1}, 2, {u: set()}) == 2
    step = RevealStep(v, {a, b, v}, ())
    assert paper_choose(step, {a: 1, b: 2}, 2, {a: set(), b: set()}) == 1
    assert forbidden_colors(Graph(2), {0: 1, 1: 2}, 3).forbidden == {3}
    with pytest.raises(InputError):
        paper_choose(RevealStep(v, {a, b, u, v}, ()), {a: 1, b: 2, u: 3}, 2, {})


def test_first_fit_examples():
    assert first_fit_choose(RevealStep(0, {0}, ()), {}) == 1
    assert first_fit_choose(RevealStep(3, {1, 2, 3}, {1, 2}), {1: 1, 2: 2}) == 3
    assert first_fit_choose(RevealStep(3, {1, 3}, {1}), {1: 2}) == 1


def test_reveal_step_invariants():
    with pytest.raises(InputError):
        RevealStep(0, {1}, ())
    with pytest.raises(InputError):
        RevealStep(0, {0, 1}, {2})


def test_run_online_first_fit_on_path():
    npd = NicePathDecomposition([(), {0}, {0, 1}, {1, 2}])
    coloring, used = run_online(FirstFit(), Graph.path(3), npd)
    assert coloring == {0: 1, 1: 2, 2: 1} and used == 2


def test_run_online_paper_on_c5():
    c5 = Graph.cycle(5)
    npd = make_nice(PathDecomposition([{0, 1, 2}, {0, 2, 3}, {0, 3, 4}]), c5)
    coloring, used = run_online(TriangleFreeColoring(2, audit=True), c5, npd)
    assert is_proper(c5, coloring)
    assert used <= 3 and used == chromatic_number_exact(c5)


def test_run_online_paper_on_tree():
    tree = Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (2, 4)])
    npd = NicePathDecomposition([(), {1}, {1, 0}, {1, 3}, {1, 2}, {2, 4}])
    _, used = run_online(TriangleFreeColoring(1), tree, npd)
    assert used <= 2


class Clasher(OnlineAlgorithm):
    def pick(self, step):
        return 1


def test_run_online_catches_contract_violation():
    npd = NicePathDecomposition([(), {0}, {0, 1}])
    with pytest.raises(ContractViolation, match="step 2"):
        run_online(Clasher(), Graph.complete(2), npd)


def test_no_qualifying_color_outside_hypothesis():
    k4 = Graph.complete(4)
    chain = NicePathDecomposition([(), {0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}])
    with pytest.raises(NoQualifyingColorError) as info:
        run_online(TriangleFreeColoring(3), k4, chain)
    assert info.value.history and "triangle-free" in str(info.value)
    coloring, used = run_online(TriangleFreeColoring(3, strict=False), k4, chain)
    assert used == 4 and is_proper(k4, coloring)


def test_registry():
    assert set(VICTIMS) == {"first-fit", "paper", "least-used", "random"}
    assert isinstance(make_victim("paper", 3), TriangleFreeColoring)
    assert make_victim("paper", 3, k=4).strict is False
    with pytest.raises(InputError):
        make_victim("nobody", 1)


@st.composite
def colored_graphs(draw, max_n=9, max_c=6):
    g = draw(graphs(max_n=max_n))
    c = draw(st.integers(1, max_c))
    # proper coloring drawn greedily in a random order from random preferences
    order = draw(st.permutations(range(g.n)))
    phi = {}
    for v in order:
        free = [x for x in range(1, c + 1) if all(phi.get(u) != x for u in g.neighbors(v))]
        if not free:
            return g, c, None
        phi[v] = draw(st.sampled_from(free))
    return g, c, phi


@settings(max_examples=300, deadline=None)
@given(colored_graphs())
def test_forbidden_matches_brute_force_and_count_bound(sample):
    g, c, phi = sample
    if phi is None:
        return
    assert forbidden_colors(g, phi, c).forbidden == brute_forbidden(g, phi, c)
    assert is_valid_coloring(g, phi, c) == brute_valid(g, phi, c)
    report = forbidden_colors(g, phi, c)
    for a, witness in report.witness.items():
        assert {phi[v] for v in witness} == set(range(1, c + 1)) - {a}
    if is_valid_coloring(g, phi, c):
        assert len(report) <= max(g.n - c + 2, 0)
        assert count_bound_check(g, phi, c)


def test_availability_bound_at_least_one_in_regime():
    for t in range(1, 12):
        c = palette_size(t)
        for n_nb in range(t + 1):
            assert max(1, availability_bound(t, n_nb, c)) >= 1
            if n_nb <= c - 1:
                assert availability_bound(t, n_nb, c) == min(2 * c - t - 2, c - n_nb)


@pytest.mark.parametrize("victim", sorted(VICTIMS))
def test_fork_determinism(victim):
    from twcolor.generate import gen_random_instance

    g, pd = gen_random_instance(3, 12, 0.7, 11, shape="path")
    npd = make_nice(pd, g)
    steps = list(reveal_steps(g, npd))
    a = make_victim(victim, 3, seed=5)
    for step in steps[:5]:
        a.choose(step)
    b = a.fork()
    tail_a = [a.choose(s) for s in steps[5:]]
    tail_b = [b.choose(s) for s in steps[5:]]
    assert tail_a == tail_b
    fresh = make_victim(victim, 3, seed=5)
    assert [fresh.choose(s) for s in steps] == [c for _, c in a.history]


def test_fork_independence():
    steps = [RevealStep(v, {v}, ()) for v in range(3)]
    a = SeededRandom(1)
    a.choose(steps[0])
    b = a.fork()
    b.choose(steps[1])
    assert 1 not in a.colors and 1 in b.colors


def test_least_used_balances():
    alg = LeastUsed()
    colors = [alg.choose(RevealStep(v, {v}, ())) for v in range(3)]
    assert colors == [1, 1, 1]
    alg2 = LeastUsed()
    alg2.choose(RevealStep(0, {0}, ()))
    alg2.choose(RevealStep(1, {0, 1}, {0}))
    assert alg2.choose(RevealStep(2, {2}, ())) == 1
    assert alg2.counts == {1: 2, 2: 1}


def test_audit_log_shared_across_forks():
    log = AuditLog()
    alg = TriangleFreeColoring(2, audit=log)
    alg.choose(RevealStep(0, {0}, ()))
    alg.fork().choose(RevealStep(1, {0, 1}, {0}))
    assert log.steps == 2 and not log.violations
