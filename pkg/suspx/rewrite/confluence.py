# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Checkers of local confluence and of associativity of environment merging."""

import dataclasses
import logging
import typing

from suspx._backends.tree import format_position, Node
from suspx.errors import IllFormedInputs
from suspx.rewrite.normalize import rm_normalize
from suspx.rewrite.redexes import apply_rule, enumerate_redexes
from suspx.rewrite.rules import MetaMode, READING_AND_MERGING
from suspx.syntax.expressions import Merged
from suspx.syntax.levels import monus
from suspx.syntax.measures import env_len, env_lev
from suspx.syntax.wellformed import check_wellformed

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class CounterexampleReport(object):
    """
    Two expressions which should have the same normal form, but do not.

    Attributes
    ----------
    description
        What the two expressions are.
    left
        First expression.
    right
        Second expression.
    left_normal
        Normal form of the first expression.
    right_normal
        Normal form of the second expression.
    """

    description: str
    left: Node
    right: Node
    left_normal: Node
    right_normal: Node


def check_local_confluence(
    x: Node, mode: MetaMode = MetaMode.GRAFTABLE, budget: typing.Optional[int] = None
) -> typing.Optional[CounterexampleReport]:
    """
    Check that every pair of one-step reading and merging successors of x has a common reduct.

    Parameters
    ----------
    x
        Wellformed suspension expression.
    mode
        Interpretation of meta variables.
    budget
        Fuel of each normalization of a successor.

    Returns
    -------
    :
        None when all successors share their normal form, a report on the first failing pair otherwise.
    """
    successors = [
        (position, rule, apply_rule(x, rule, position, mode))
        for (position, rule) in enumerate_redexes(x, READING_AND_MERGING, mode)]
    if len(successors) < 2:
        return None
    first_position, first_rule, first = successors[0]
    first_normal = rm_normalize(first, mode, budget)
    for (position, rule, successor) in successors[1:]:
        normal = rm_normalize(successor, mode, budget)
        if normal != first_normal:
            description = (
                f"{first_rule.value} at {format_position(first_position)!r} and {rule.value} at "
                + f"{format_position(position)!r}")
            logger.warning("Local confluence fails for %s", description)
            return CounterexampleReport(description, first, successor, first_normal, normal)
    return None


def check_assoc(
    e1: Node, nl1: int, ol2: int, e2: Node, nl2: int, ol3: int, e3: Node, mode: MetaMode = MetaMode.GRAFTABLE
) -> typing.Optional[CounterexampleReport]:
    """
    Check that both ways of merging three environments have the same normal form.

    Parameters
    ----------
    e1, e2, e3
        Wellformed environments, with the lengths of e2 and e3 equal to ol2 and ol3.
    nl1, nl2
        New embedding levels, bounding the levels of e1 and e2.
    ol2, ol3
        Old embedding levels.
    mode
        Interpretation of meta variables.

    Returns
    -------
    :
        None when {{e1, nl1, ol2, e2}, nl2 + (nl1 - ol2), ol3, e3} and {e1, nl1, ol2 + (ol3 - nl2),
        {e2, nl2, ol3, e3}} have the same normal form (both differences being truncated), a report otherwise.
    """
    if env_len(e2) != ol2 or env_len(e3) != ol3:
        raise IllFormedInputs("The lengths of e2 and e3 must be ol2 and ol3")
    if env_lev(e1) > nl1 or env_lev(e2) > nl2:
        raise IllFormedInputs("The levels of e1 and e2 must not exceed nl1 and nl2")
    for e in (e1, e2, e3):
        violation = check_wellformed(e)
        if violation is not None:
            raise IllFormedInputs(f"Ill-formed environment {violation}")
    left = Merged(Merged(e1, nl1, ol2, e2), nl2 + monus(nl1, ol2), ol3, e3)
    right = Merged(e1, nl1, ol2 + monus(ol3, nl2), Merged(e2, nl2, ol3, e3))
    left_normal = rm_normalize(left, mode)
    right_normal = rm_normalize(right, mode)
    if left_normal != right_normal:
        return CounterexampleReport("left and right associated merges", left, right, left_normal, right_normal)
    return None
