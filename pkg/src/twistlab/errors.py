"""Exception types raised across twistlab."""

from __future__ import annotations


class TwistlabError(Exception):
    """Base class for every error raised by this package."""


class BaseMismatch(TwistlabError):
    pass


class NotInOverlap(TwistlabError):
    pass


class NotInChart(TwistlabError):
    pass


class SamplingTooCoarse(TwistlabError):
    def __init__(self, index: int, gap: object):
        super().__init__(f"sample gap {gap} at index {index} is not below 1/4")
        self.index = index
        self.gap = gap


class WrongBundle(TwistlabError):
    def __init__(self, index: int, message: str = ""):
        super().__init__(f"entry {index} lies in the wrong letter bundle{': ' + message if message else ''}")
        self.index = index


class ChainMismatch(TwistlabError):
    def __init__(self, index: int, message: str = ""):
        super().__init__(f"compatibility chain fails at index {index}{': ' + message if message else ''}")
        self.index = index


class NotComposable(TwistlabError):
    def __init__(self, left: object, right: object, message: str = "not composable"):
        super().__init__(f"{message}: left source {left} != right range {right}")
        self.left = left
        self.right = right


class NotSubgroupoid(TwistlabError):
    def __init__(self, witness: tuple):
        super().__init__(f"word filter is not closed: witness {witness}")
        self.witness = witness


class NotInGrading(TwistlabError):
    pass


class NotASection(TwistlabError):
    pass


class CocycleIdentityViolated(TwistlabError):
    def __init__(self, witness: tuple):
        super().__init__(f"2-cocycle identity fails on triple {witness}")
        self.witness = witness


class ExpressionSyntaxError(TwistlabError):
    """Raised by the expression parser; carries a 1-based position and the expected tokens."""

    def __init__(self, line: int, col: int, expected: list[str], found: str):
        self.line = line
        self.col = col
        self.expected = sorted(set(expected))
        self.found = found
        super().__init__(
            f"line {line}, col {col}: expected one of {', '.join(self.expected)}; found {found!r}"
        )


class UnknownSuite(TwistlabError):
    pass
