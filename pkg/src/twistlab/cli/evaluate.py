"""Evaluate parsed expressions in the twist E."""

from __future__ import annotations

from ..errors import ChainMismatch, NotComposable, WrongBundle
from ..twistcore.groupoid import FreeTwist, TwistElement
from .expr import Action, Expression, Inverse, Literal, Product, parse


class EvaluationError(Exception):
    """A well-formed expression that cannot be evaluated; wraps the cause with its position."""

    def __init__(self, line: int, col: int, cause: Exception):
        super().__init__(f"line {line}, col {col}: {cause}")
        self.line = line
        self.col = col
        self.cause = cause


def evaluate(node: Expression, twist: FreeTwist | None = None) -> TwistElement:
    twist = twist or FreeTwist()
    if isinstance(node, Literal):
        return TwistElement.of(node.cls)
    if isinstance(node, Product):
        left = evaluate(node.left, twist)
        right = evaluate(node.right, twist)
        try:
            return twist.multiply(left, right)
        except (NotComposable, WrongBundle, ChainMismatch) as exc:
            raise EvaluationError(node.line, node.col, exc) from exc
    if isinstance(node, Inverse):
        return twist.invert(evaluate(node.operand, twist))
    if isinstance(node, Action):
        return twist.t_act(node.angle, evaluate(node.operand, twist))
    raise TypeError(f"not an expression node: {node!r}")


def eval_text(text: str, twist: FreeTwist | None = None) -> TwistElement:
    return evaluate(parse(text), twist)
