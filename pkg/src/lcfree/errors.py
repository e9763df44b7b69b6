"""Exception types shared across the package."""

from __future__ import annotations


class VertexOutOfRange(ValueError):
    pass


class DegenerateEdge(ValueError):
    """A triple that repeats a vertex."""


class SearchBudgetExceeded(RuntimeError):
    """An exact search hit its node cap before reaching a verdict.

    Never to be read as a negative answer.
    """


class CapExceeded(ValueError):
    """An instance is larger than a brute-force routine accepts."""


class SeedNotInActive(ValueError):
    pass


class VertexNotInTree(ValueError):
    pass


class NotAnOppositePair(ValueError):
    pass


class CaseContradiction(RuntimeError):
    """The 2n/5 construction met a configuration its correctness argument excludes."""


class IndependenceViolation(RuntimeError):
    pass


class ColoringViolation(RuntimeError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
