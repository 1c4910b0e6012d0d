# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Leftmost outermost normalization in the suspension calculus."""

import logging
import typing

from suspx import defaults
from suspx._backends.rewriting import reduce, TraceStep
from suspx._backends.tree import Node
from suspx.rewrite.rules import ALL_RULES, MetaMode, READING, READING_AND_MERGING, RuleId, rules_for
from suspx.syntax.expressions import Cons, EnvTerm, Merged, Nil, Susp
from suspx.syntax.levels import check_level, monus

logger = logging.getLogger(__name__)


def rm_normalize(x: Node, mode: MetaMode = MetaMode.GRAFTABLE, fuel: typing.Optional[int] = None) -> Node:
    """
    Compute the reading and merging normal form of a term or an environment.

    Parameters
    ----------
    x
        Wellformed suspension expression.
    mode
        Interpretation of meta variables.
    fuel
        Safety bound on the number of steps, defaulting to suspx.defaults.RM_FUEL.

    Returns
    -------
    :
        The unique expression reachable from x to which no reading or merging rule applies.
    """
    normal_form, _ = rm_derivation(x, mode, fuel, record=False)
    return normal_form


def rm_derivation(
    x: Node, mode: MetaMode = MetaMode.GRAFTABLE, fuel: typing.Optional[int] = None, record: bool = True
) -> typing.Tuple[Node, typing.List[TraceStep]]:
    """Compute the reading and merging normal form of x together with the leftmost outermost derivation to it."""
    return reduce(
        x, rules_for(READING_AND_MERGING, mode), fuel=fuel if fuel is not None else defaults.RM_FUEL, record=record)


def r_normalize(x: Node, mode: MetaMode = MetaMode.GRAFTABLE, fuel: typing.Optional[int] = None) -> Node:
    """Normalize x with the reading rules only."""
    normal_form, _ = reduce(
        x, rules_for(READING, mode), fuel=fuel if fuel is not None else defaults.RM_FUEL, record=False)
    return normal_form


def full_normalize(
    x: Node, budget: typing.Optional[int] = None, mode: MetaMode = MetaMode.GRAFTABLE, record: bool = True
) -> typing.Tuple[Node, typing.List[TraceStep]]:
    """
    Normalize x with every rule, contracting the leftmost outermost redex first.

    Parameters
    ----------
    x
        Wellformed suspension expression.
    budget
        Maximum number of beta_s steps, defaulting to suspx.defaults.MAX_STEPS. Reading and merging steps
        do not count towards the budget.
    mode
        Interpretation of meta variables.
    record
        Whether to record the derivation.

    Returns
    -------
    :
        A tuple containing the normal form and the derivation leading to it.
        BudgetExhausted is raised, carrying the partial result and derivation, when the budget runs out.
    """
    return reduce(
        x, rules_for(ALL_RULES, mode), budget=budget if budget is not None else defaults.MAX_STEPS,
        budgeted=frozenset([RuleId.BETA_S.value]), fuel=defaults.RM_FUEL, record=record)


def env_to_simple(e: Node) -> Node:
    """
    Evaluate the merged environments of e with the rules m2 to m6.

    Environment terms are left untouched, apart from the suspensions created by m6.

    Parameters
    ----------
    e
        Wellformed environment.

    Returns
    -------
    :
        A simple environment with the same length as e and a level not above the one of e.
    """
    if isinstance(e, Nil):
        return e
    elif isinstance(e, Cons):
        return Cons(e.head, env_to_simple(e.tail))
    assert isinstance(e, Merged), f"Not an environment: {e!r}"
    e1 = env_to_simple(e.e1)
    e2 = env_to_simple(e.e2)
    nl1, ol2 = e.nl1, e.ol2
    while True:
        if ol2 == 0 and isinstance(e2, Nil):
            return e1
        elif isinstance(e1, Nil) and nl1 == 0:
            return e2
        elif isinstance(e1, Nil) and isinstance(e2, Cons):
            nl1, ol2, e2 = nl1 - 1, ol2 - 1, e2.tail
        elif isinstance(e1, Cons) and isinstance(e2, Cons) and nl1 > e1.head.level:
            nl1, ol2, e2 = nl1 - 1, ol2 - 1, e2.tail
        elif isinstance(e1, Cons) and isinstance(e2, Cons) and nl1 == e1.head.level:
            n = e1.head.level
            level = e2.head.level
            head = EnvTerm(Susp(e1.head.term, ol2, level, e2), check_level(level + monus(n, ol2)))
            return Cons(head, env_to_simple(Merged(e1.tail, n, ol2, e2)))
        else:
            raise RuntimeError(f"Merged environment {{{e1!r}, {nl1}, {ol2}, {e2!r}}} is not wellformed")
