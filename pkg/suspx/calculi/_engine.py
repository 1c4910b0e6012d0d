# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Helpers shared by the rewrite engines of the other explicit substitution calculi."""

import typing

from suspx._backends.rewriting import apply_rule, Rule
from suspx._backends.tree import Node, Position
from suspx.errors import RuleNotApplicable


def table(*rules: Rule) -> typing.Dict[str, Rule]:
    """Index rules by their identifier, preserving the order in which they are tried."""
    return {rule.rule_id: rule for rule in rules}


def step(x: Node, rules: typing.Mapping[str, Rule], position: Position, rule_id: str) -> Node:
    """Contract the redex of the rule called rule_id at position."""
    try:
        rule = rules[rule_id]
    except KeyError:
        raise RuleNotApplicable(f"Unknown rule {rule_id!r}")
    return apply_rule(x, rule, position)

