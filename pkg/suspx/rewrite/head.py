# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Head normal forms and (generalized) head reduction."""

import dataclasses
import logging
import typing

from suspx import defaults
from suspx._backends.rewriting import leftmost_outermost, reduce, Rule, TraceStep
from suspx._backends.tree import Node, Position, replace_subexpression, subexpression
from suspx.errors import BudgetExhausted, NotHNF
from suspx.lambda_core.debruijn import Abs, App, Const, Index
from suspx.rewrite.rules import MetaMode, READING_AND_MERGING, RuleId, RULES, rules_for
from suspx.syntax.expressions import MetaVar, Susp

logger = logging.getLogger(__name__)


def _is_flexible_head(x: Node) -> bool:
    return isinstance(x, Susp) and isinstance(x.term, MetaVar)


def hnf_decompose(x: Node) -> typing.Tuple[int, Node, typing.List[Node]]:
    """
    Decompose a head normal form.

    Parameters
    ----------
    x
        Term of the shape lambda ... lambda (h t1 ... tn).

    Returns
    -------
    :
        A tuple containing the number of leading abstractions, the head h and the arguments t1 ... tn.
        The head is a constant, an index, a meta variable, or a suspended meta variable.
    """
    binders = 0
    while isinstance(x, Abs):
        binders += 1
        x = x.body
    args: typing.List[Node] = []
    while isinstance(x, App):
        args.append(x.arg)
        x = x.fun
    if not (isinstance(x, (Const, Index, MetaVar)) or _is_flexible_head(x)):
        raise NotHNF(f"{type(x).__name__} in head position")
    args.reverse()
    return binders, x, args


def is_hnf(x: Node) -> bool:
    """Tell whether x is a head normal form."""
    try:
        hnf_decompose(x)
    except NotHNF:
        return False
    else:
        return True


def _head_beta_position(x: Node) -> typing.Optional[Position]:
    """Return the position of the head beta_s-redex of x, if any."""
    position: Position = ()
    while True:
        if isinstance(x, Abs):
            x, position = x.body, position + (0, )
        elif isinstance(x, App):
            if isinstance(x.fun, Abs):
                return position
            x, position = x.fun, position + (0, )
        else:
            return None


def _generalized_head_redex(
    x: Node, rm_rules: typing.Sequence[Rule]
) -> typing.Optional[typing.Tuple[Position, Rule]]:
    """
    Select the next generalized head redex.

    Walking down the spine, the first reading or merging redex fires; otherwise the head beta_s-redex fires.
    A suspension on the spine matching no rule has an environment to be evaluated first, unless it
    suspends a meta variable, which is then a flexible head.
    """
    position: Position = ()
    node = x
    while True:
        for rule in rm_rules:
            if rule.matches(node):
                return position, rule
        if isinstance(node, Abs):
            node, position = node.body, position + (0, )
        elif isinstance(node, App):
            if isinstance(node.fun, Abs):
                return position, RULES[RuleId.BETA_S]
            node, position = node.fun, position + (0, )
        elif isinstance(node, Susp) and not _is_flexible_head(node):
            inner = leftmost_outermost(node, rm_rules)
            assert inner is not None, "A stuck suspension on the spine is not wellformed"
            return position + inner[0], inner[1]
        else:
            return None


def head_normalize(
    x: Node, budget: typing.Optional[int] = None, generalized: bool = True, mode: MetaMode = MetaMode.GRAFTABLE
) -> typing.Tuple[Node, typing.List[TraceStep]]:
    """
    Reduce x to head normal form.

    Parameters
    ----------
    x
        Wellformed suspension term.
    budget
        Maximum number of beta_s steps, defaulting to suspx.defaults.MAX_STEPS.
    generalized
        Whether to use generalized head reduction, which only contracts redexes on the way to the head.
        Otherwise, the whole term is brought to reading and merging normal form after each head beta_s step.
    mode
        Interpretation of meta variables.

    Returns
    -------
    :
        A tuple containing the head normal form and the derivation leading to it.
    """
    if budget is None:
        budget = defaults.MAX_STEPS
    rm_rules = rules_for(READING_AND_MERGING, mode)
    if generalized:
        return reduce(
            x, rm_rules + [RULES[RuleId.BETA_S]], budget=budget, budgeted=frozenset([RuleId.BETA_S.value]),
            fuel=defaults.RM_FUEL, select=lambda y, _: _generalized_head_redex(y, rm_rules))

    trace: typing.List[TraceStep] = []

    def _rm_normalize(y: Node) -> Node:
        y, steps = reduce(y, rm_rules, fuel=defaults.RM_FUEL)
        offset = len(trace)
        trace.extend(dataclasses.replace(step, step_index=offset + s) for (s, step) in enumerate(steps))
        return y

    x = _rm_normalize(x)
    beta_steps = 0
    while True:
        position = _head_beta_position(x)
        if position is None:
            return x, trace
        if beta_steps >= budget:
            logger.info("Budget of %d steps exhausted before reaching a head normal form", budget)
            raise BudgetExhausted(x, beta_steps, trace)
        after = replace_subexpression(x, position, RULES[RuleId.BETA_S].rewrite(subexpression(x, position)))
        trace.append(TraceStep(RuleId.BETA_S.value, position, x, after, len(trace)))
        beta_steps += 1
        x = _rm_normalize(after)
