# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Rule application, redex enumeration and budgeted reduction over expression trees."""

import dataclasses
import logging
import typing

from suspx._backends.tree import format_position, Node, Position, preorder, replace_subexpression, subexpression
from suspx.errors import BudgetExhausted, InternalFuelExhausted, RuleNotApplicable

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Rule(object):
    """
    A rewrite rule acting on the root of a subexpression.

    Attributes
    ----------
    rule_id
        Identifier of the rule, as printed in traces.
    matches
        Predicate deciding whether the left-hand side and the side conditions match.
    rewrite
        Instantiation of the right-hand side, only called on matching nodes.
    """

    rule_id: str
    matches: typing.Callable[[Node], bool]
    rewrite: typing.Callable[[Node], Node]


@dataclasses.dataclass(frozen=True)
class TraceStep(object):
    """
    One rewrite event.

    Attributes
    ----------
    rule
        Identifier of the rule which fired.
    position
        Position of the contracted redex.
    before
        Whole expression before the step.
    after
        Whole expression after the step.
    step_index
        Zero-based index of the step in its derivation.
    """

    rule: str
    position: Position
    before: Node
    after: Node
    step_index: int


Selector = typing.Callable[[Node, typing.Sequence[Rule]], typing.Optional[typing.Tuple[Position, Rule]]]


def applicable(node: Node, rules: typing.Sequence[Rule]) -> typing.List[Rule]:
    """Return the rules matching at the root of node, in the order they are listed."""
    return [rule for rule in rules if rule.matches(node)]


def enumerate_redexes(x: Node, rules: typing.Sequence[Rule]) -> typing.List[typing.Tuple[Position, Rule]]:
    """Return every (position, rule) match in preorder position order, rules in listed order within a position."""
    return [(position, rule) for (position, node) in preorder(x) for rule in applicable(node, rules)]


def leftmost_outermost(x: Node, rules: typing.Sequence[Rule]) -> typing.Optional[typing.Tuple[Position, Rule]]:
    """Return the first match in preorder, if any."""
    for (position, node) in preorder(x):
        for rule in rules:
            if rule.matches(node):
                return position, rule
    return None


def apply_rule(x: Node, rule: Rule, position: Position) -> Node:
    """Contract the redex of the given rule at position."""
    node = subexpression(x, position)
    if not rule.matches(node):
        raise RuleNotApplicable(f"Rule {rule.rule_id} does not match at position {format_position(position)!r}")
    return replace_subexpression(x, position, rule.rewrite(node))


def reduce(
    x: Node, rules: typing.Sequence[Rule], budget: typing.Optional[int] = None,
    budgeted: typing.Optional[typing.AbstractSet[str]] = None, fuel: typing.Optional[int] = None,
    fuel_error: typing.Type[InternalFuelExhausted] = InternalFuelExhausted, record: bool = True,
    select: Selector = leftmost_outermost
) -> typing.Tuple[Node, typing.List[TraceStep]]:
    """
    Rewrite x until no rule applies.

    Parameters
    ----------
    x
        Expression to be reduced.
    rules
        Rules to be used, in priority order within a position.
    budget
        Maximum number of budgeted steps. None means unbounded.
    budgeted
        Rule identifiers counted towards the budget. None means every rule.
    fuel
        Maximum number of steps of any kind. None means unbounded.
    fuel_error
        Exception raised when the fuel runs out.
    record
        Whether to record the derivation.
    select
        Strategy picking the next redex.

    Returns
    -------
    :
        A tuple containing the normal form and the recorded derivation (empty when record is False).
    """
    trace: typing.List[TraceStep] = []
    counted = 0
    performed = 0
    while True:
        redex = select(x, rules)
        if redex is None:
            return x, trace
        position, rule = redex
        if budgeted is None or rule.rule_id in budgeted:
            if budget is not None and counted >= budget:
                logger.info("Budget of %d steps exhausted", budget)
                raise BudgetExhausted(x, counted, trace)
            counted += 1
        if fuel is not None and performed >= fuel:
            raise fuel_error(f"No normal form within {fuel} steps")
        after = replace_subexpression(x, position, rule.rewrite(subexpression(x, position)))
        logger.debug("Step %d: %s at %r", performed, rule.rule_id, format_position(position))
        if record:
            trace.append(TraceStep(rule.rule_id, position, x, after, performed))
        performed += 1
        x = after
