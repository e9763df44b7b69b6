from itertools import combinations

import pytest
from hypothesis import given

from lcfree.core import new_hypergraph
from lcfree.errors import DegenerateEdge, ParseError, VertexOutOfRange
from lcfree.generators import complete_k53
from lcfree.textformat import emit, parse

from conftest import hypergraphs


def test_parse_single_edge():
    assert parse("3 1\n0 1 2\n") == new_hypergraph(3, [(0, 1, 2)])


def test_parse_k53():
    text = "5 10\n" + "".join(f"{a} {b} {c}\n" for a, b, c in combinations(range(5), 3))
    assert parse(text) == complete_k53(1)


def test_parse_degenerate_edge_reports_line():
    with pytest.raises(DegenerateEdge) as info:
        parse("3 1\n0 0 1\n")
    assert info.value.line == 2


def test_parse_comments_and_blanks():
    text = "# header next\n\n4 2  # n m\n2 1 0\n\n# done\n1 2 3\n"
    assert parse(text).edges == ((0, 1, 2), (1, 2, 3))


@pytest.mark.parametrize(
    "text, exc, line",
    [
        ("3 1\n0 1\n", ParseError, 2),
        ("3\n", ParseError, 1),
        ("3 2\n0 1 2\n", ParseError, None),
        ("3 1\n0 1 2\n0 1 2\n", ParseError, 3),
        ("3 1\na b c\n", ParseError, 2),
        ("3 1\n0 1 7\n", VertexOutOfRange, 2),
        ("", ParseError, None),
    ],
)
def test_parse_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse(text)
    assert getattr(info.value, "line", None) == line


def test_emit_is_canonical():
    h = new_hypergraph(4, [(3, 2, 1), (2, 1, 0)])
    assert emit(h) == "4 2\n0 1 2\n1 2 3\n"


@pytest.mark.parametrize(
    "h",
    [new_hypergraph(3, [(0, 1, 2)]), complete_k53(1), new_hypergraph(4, [])],
)
def test_round_trip_examples(h):
    assert parse(emit(h)) == h


@given(hypergraphs(min_n=0, max_n=9))
def test_round_trip(h):
    assert parse(emit(h)) == h
