# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""A lambda-sigma derivation repeating itself forever, and its suspension calculus counterpart."""

import dataclasses
import logging
import typing

from suspx._backends.rewriting import apply_rule, TraceStep
from suspx._backends.tree import node_count, Node, Position, preorder, subexpression
from suspx.calculi.sigma import Comp, Dot, Id, RULES, SigClosure, SigShift
from suspx.errors import PatternNotFound, RuleNotApplicable
from suspx.lambda_core.debruijn import Abs, App
from suspx.rewrite.normalize import full_normalize
from suspx.rewrite.rules import MetaMode
from suspx.syntax.expressions import Susp

logger = logging.getLogger(__name__)

# Steps exposing the first occurrence of the pattern, relative to the root
_OPENING = (
    ("sigma.App", ()), ("sigma.Abs", (0, )), ("sigma.Beta", ()), ("sigma.Clos", ()), ("sigma.Map", (1, )),
    ("sigma.Ass", (1, 1)))

# Steps of one cycle, relative to a subterm s o W with s the initial substitution
_CYCLE = (
    ("sigma.Map", ()), ("sigma.IdL", (1, )), ("sigma.App", (0, )), ("sigma.Abs", (0, 0)), ("sigma.Beta", (0, )),
    ("sigma.Clos", (0, )), ("sigma.Map", (0, 1)), ("sigma.Ass", (0, 1, 1)))

# Steps turning (! o (b[Y] . id)) o V into ! o (b[Y o V] . (id o V)), relative to the composition
_BRIDGE = (("sigma.Ass", ()), ("sigma.Map", (1, )), ("sigma.Clos", (1, 0)))


@dataclasses.dataclass(frozen=True)
class GrowthReport(object):
    """
    Sizes of the terms reached at the end of each cycle.

    Attributes
    ----------
    sizes
        Node count of the whole term after each cycle.
    positions
        Position of the pattern re-located after each cycle.
    """

    sizes: typing.Tuple[int, ...]
    positions: typing.Tuple[Position, ...]

    @property
    def strictly_increasing(self) -> bool:
        """Tell whether each cycle produced a larger term than the previous one."""
        return all(before < after for (before, after) in zip(self.sizes, self.sizes[1:]))


class _Derivation(object):
    """A lambda-sigma derivation driven one step at a time."""

    def __init__(self, start: Node) -> None:
        self.current = start
        self.trace: typing.List[TraceStep] = []

    def run(self, steps: typing.Sequence[typing.Tuple[str, Position]], at: Position = ()) -> None:
        for (rule_id, relative) in steps:
            position = at + relative
            try:
                after = apply_rule(self.current, RULES[rule_id], position)
            except RuleNotApplicable as e:
                raise PatternNotFound(f"Expected a {rule_id} redex at {position}: {e}")
            self.trace.append(TraceStep(rule_id, position, self.current, after, len(self.trace)))
            self.current = after


def _pattern_argument(x: Node, b: Node) -> typing.Optional[Node]:
    """Return X if x is X o (! o (b[X] . id)), None otherwise."""
    if not isinstance(x, Comp):
        return None
    tail = x.right
    if (
        isinstance(tail, Comp) and isinstance(tail.left, SigShift) and isinstance(tail.right, Dot)
            and tail.right.term == SigClosure(b, x.left) and isinstance(tail.right.sub, Id)):
        return x.left
    return None


def _locate(x: Node, b: Node) -> Position:
    for (position, node) in preorder(x):
        if _pattern_argument(node, b) is not None:
            return position
    raise PatternNotFound("No subterm of the form X o (! o (b[X] . id))")


def mellies_unfold(a: Node, b: Node, cycles: int) -> typing.Tuple[typing.List[TraceStep], GrowthReport]:
    """
    Unfold the cyclic lambda-sigma derivation starting from ((\\a) b)[((\\a) b) . id].

    Parameters
    ----------
    a
        Body of the abstraction.
    b
        Argument of the application.
    cycles
        Number of times the cycle is repeated, at least one.

    Returns
    -------
    :
        A tuple containing the derivation and the sizes reached after each cycle.
    """
    if cycles < 1:
        raise ValueError("At least one cycle is required")
    redex = App(Abs(a), b)
    s = Dot(redex, Id())
    derivation = _Derivation(SigClosure(redex, s))
    derivation.run(_OPENING)
    sizes: typing.List[int] = []
    positions: typing.List[Position] = []
    position = _locate(derivation.current, b)
    for cycle in range(cycles):
        # Walk down the chain of substitutions until the initial one is in front.
        while True:
            node = derivation.current
            focus = subexpression(node, position)
            assert isinstance(focus, Comp)
            if focus.left == s:
                break
            if not (isinstance(focus.left, Comp) and isinstance(focus.left.right, Dot)):
                raise PatternNotFound(f"Unexpected substitution in front of the cycle at {position}")
            derivation.run(_BRIDGE, position)
            position = position + (1, 0, 1)
        derivation.run(_CYCLE, position)
        position = _locate(derivation.current, b)
        sizes.append(node_count(derivation.current))
        positions.append(position)
        logger.info("Cycle %d reached size %d", cycle + 1, sizes[-1])
    return derivation.trace, GrowthReport(tuple(sizes), tuple(positions))


def mellies_replay(
    a: Node, b: Node, ol: int, nl: int, e: Node
) -> typing.Tuple[Node, typing.List[TraceStep]]:
    """Normalize the suspension calculus counterpart [(\\a) b, ol, nl, e] of the cyclic derivation start."""
    return full_normalize(Susp(App(Abs(a), b), ol, nl, e), mode=MetaMode.GRAFTABLE)
