from pathlib import Path

import pytest

from twcolor.decomposition import validate, width
from twcolor.graph import Graph
from twcolor.pace import (
    PaceSyntaxError,
    PaceWarning,
    read_pace_gr,
    read_pace_td,
    read_pace_td_header,
    write_pace_gr,
    write_pace_td,
)

FIXTURES = Path(__file__).parent / "fixtures"


def strip_comments(text: str) -> str:
    lines = [" ".join(line.split()) for line in text.splitlines()]
    return "\n".join(l for l in lines if l and not l.startswith("c")) + "\n"


def test_read_single_bag():
    td = read_pace_td("s td 1 3 3\nb 1 1 2 3\n")
    assert td.bags == (frozenset({0, 1, 2}),)
    assert width(td) == 2


def test_declared_size_mismatch_warns():
    with pytest.warns(PaceWarning):
        read_pace_td("s td 1 2 3\nb 1 1 2 3\n")


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.gr")), ids=lambda p: p.name)
def test_gr_round_trip_is_byte_stable(path):
    text = path.read_text()
    once = write_pace_gr(read_pace_gr(text))
    assert once == strip_comments(text)
    assert write_pace_gr(read_pace_gr(once)) == once


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.td")), ids=lambda p: p.name)
def test_td_round_trip_is_byte_stable(path):
    text = path.read_text()
    td, n = read_pace_td_header(text)
    assert write_pace_td(td, n) == strip_comments(text)


def test_gr_edge_order_and_whitespace_do_not_matter():
    a = read_pace_gr("c hi\np tw 3 2\n2   3\n1 2\n")
    assert a == Graph.path(3)
    assert write_pace_gr(a) == "p tw 3 2\n1 2\n2 3\n"


def test_fixture_decompositions_are_valid():
    for name in ("c5", "k4", "petersen", "partial3tree"):
        g = read_pace_gr((FIXTURES / f"{name}.gr").read_text())
        td = read_pace_td((FIXTURES / f"{name}.td").read_text())
        assert validate(g, td).ok, name
    k4 = read_pace_gr((FIXTURES / "k4.gr").read_text())
    assert not validate(k4, read_pace_td((FIXTURES / "k4_bad.td").read_text())).ok


@pytest.mark.parametrize(
    "text, line",
    [
        ("1 2\n", 1),
        ("p tw 2 1\n1 3\n", 2),
        ("p tw 2 1\n1 x\n", 2),
        ("p tw 2 1\np tw 2 1\n", 2),
        ("p td 2 1\n", 1),
    ],
)
def test_gr_syntax_errors_carry_line_numbers(text, line):
    with pytest.raises(PaceSyntaxError) as info:
        read_pace_gr(text)
    assert info.value.line == line


@pytest.mark.parametrize(
    "text",
    [
        "b 1 1\n",
        "s td 1 1 2\nb 2 1\n",
        "s td 2 1 2\nb 1 1\nb 2 2\n1 3\n",
        "s td 1 1 2\nb 1 5\n",
        "s td 2 1 2\nb 1 1\n",
    ],
)
def test_td_errors(text):
    with pytest.raises(PaceSyntaxError):
        read_pace_td(text)
