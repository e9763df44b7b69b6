"""Plain-text hypergraph files.

Line 1 holds ``n m``, then ``m`` lines ``u v w`` with 0-based vertices.
``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

from lcfree.core import Hypergraph, new_hypergraph
from lcfree.errors import DegenerateEdge, ParseError, VertexOutOfRange


def _ints(text: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {text!r}", lineno) from None


def parse(text: str) -> Hypergraph:
    header: tuple[int, int] | None = None
    triples: list[tuple[int, ...]] = []
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        nums = _ints(line, lineno)
        if header is None:
            if len(nums) != 2 or min(nums) < 0:
                raise ParseError("header must be 'n m' with non-negative integers", lineno)
            header = (nums[0], nums[1])
            n = nums[0]
            continue
        if len(nums) != 3:
            raise ParseError(f"edge line needs 3 vertices, got {len(nums)}", lineno)
        if len(triples) == header[1]:
            raise ParseError(f"more than the declared {header[1]} edges", lineno)
        try:
            new_hypergraph(n, [nums])
        except (VertexOutOfRange, DegenerateEdge) as exc:
            exc.args = (f"line {lineno}: {exc}",)
            exc.line = lineno  # type: ignore[attr-defined]
            raise
        triples.append(tuple(nums))
    if header is None:
        raise ParseError("missing 'n m' header")
    if len(triples) != header[1]:
        raise ParseError(f"declared {header[1]} edges, found {len(triples)}")
    return new_hypergraph(n, triples)


def emit(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.m}"]
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def load(path: str) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def save(h: Hypergraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit(h))
