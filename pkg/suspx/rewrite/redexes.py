# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Matching and contraction of suspension calculus redexes at given positions."""

import typing

from suspx._backends import rewriting
from suspx._backends.tree import Node, Position, subexpression
from suspx.errors import RuleNotApplicable
from suspx.rewrite.rules import ALL_RULES, MetaMode, RuleId, RULES, rules_for


def applicable_rules(x: Node, position: Position, mode: MetaMode = MetaMode.GRAFTABLE) -> typing.List[RuleId]:
    """
    List the rules matching at a position.

    Parameters
    ----------
    x
        Suspension expression.
    position
        Position of the subexpression of interest.
    mode
        Interpretation of meta variables.

    Returns
    -------
    :
        Identifiers of the matching rules, in figure order.
    """
    node = subexpression(x, position)
    return [RuleId(rule.rule_id) for rule in rewriting.applicable(node, rules_for(ALL_RULES, mode))]


def apply_rule(x: Node, rule: RuleId, position: Position, mode: MetaMode = MetaMode.GRAFTABLE) -> Node:
    """Contract the redex of rule at position."""
    if rule == RuleId.R7 and mode != MetaMode.LOGICAL:
        raise RuleNotApplicable("Rule r7 is only enabled for logical meta variables")
    return rewriting.apply_rule(x, RULES[rule], position)


def enumerate_redexes(
    x: Node, ruleset: typing.AbstractSet[RuleId] = ALL_RULES, mode: MetaMode = MetaMode.GRAFTABLE
) -> typing.List[typing.Tuple[Position, RuleId]]:
    """List every redex of x for the given rules, in preorder position order and figure order within a position."""
    return [
        (position, RuleId(rule.rule_id))
        for (position, rule) in rewriting.enumerate_redexes(x, rules_for(ruleset, mode))]
