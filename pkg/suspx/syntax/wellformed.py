# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Wellformedness of suspension expressions."""

import dataclasses
import typing

from suspx._backends.tree import format_position, Node, Position, preorder
from suspx.lambda_core.debruijn import Index
from suspx.syntax.expressions import Cons, Merged, Susp
from suspx.syntax.measures import env_len, env_lev


@dataclasses.dataclass(frozen=True)
class WellformednessViolation(object):
    """
    The first offending subexpression of an ill-formed expression.

    Attributes
    ----------
    position
        Position of the offending subexpression.
    reason
        Human readable description of the violated constraint.
    """

    position: Position
    reason: str

    def __str__(self) -> str:
        """Pretty print the violation."""
        return f"at {format_position(self.position)!r}: {self.reason}"


def _violation(node: Node) -> typing.Optional[str]:
    if isinstance(node, Index):
        if node.i < 1:
            return f"index {node.i} is not positive"
    elif isinstance(node, Susp):
        length = env_len(node.env)
        if length != node.ol:
            return f"suspension has ol = {node.ol} but its environment has length {length}"
        level = env_lev(node.env)
        if level > node.nl:
            return f"suspension has nl = {node.nl} but its environment has level {level}"
    elif isinstance(node, Merged):
        length = env_len(node.e2)
        if length != node.ol2:
            return f"merged environment has ol2 = {node.ol2} but its right environment has length {length}"
        level = env_lev(node.e1)
        if level > node.nl1:
            return f"merged environment has nl1 = {node.nl1} but its left environment has level {level}"
    elif isinstance(node, Cons):
        level = env_lev(node.tail)
        if level > node.head.level:
            return f"environment term has level {node.head.level} but the tail has level {level}"
    return None


def check_wellformed(x: Node) -> typing.Optional[WellformednessViolation]:
    """Return None when x is wellformed, and the first violation in preorder otherwise."""
    for (position, node) in preorder(x):
        reason = _violation(node)
        if reason is not None:
            return WellformednessViolation(position, reason)
    return None
