"""Exception types raised by the sift package."""

from __future__ import annotations


class SiftError(Exception):
    """Base class for every error raised by this package."""


class InvalidTaxonomy(SiftError, ValueError):
    pass


class ParseError(SiftError):
    """An input line could not be turned into a record or edge.

    ``line`` is 1-based and refers to the physical line in the source text.
    """

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class IndentJump(ParseError):
    pass


class MixedIndent(ParseError):
    pass


class FirstLineIndented(ParseError):
    pass


class MalformedLine(ParseError):
    pass


class NoRootInComponent(SiftError):
    """A connected component has no ancestor-less node to start from."""

    def __init__(self, node: str):
        self.node = node
        super().__init__(
            f"component containing {node!r} has no root (every node has a parent); "
            "name one with --roots"
        )


class UnknownNode(SiftError, KeyError):
    def __init__(self, node: str):
        self.node = node
        super().__init__(node)

    def __str__(self) -> str:
        return f"unknown node {self.node!r}"


class NotAnnotated(SiftError):
    def __init__(self, what: str = "taxonomy"):
        super().__init__(f"{what} has not been annotated; call annotate() first")
