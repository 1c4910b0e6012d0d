# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Beta-reduction of de Bruijn terms in normal order."""

import typing

from suspx._backends.rewriting import enumerate_redexes, leftmost_outermost, reduce, Rule, TraceStep
from suspx._backends.tree import Node, Position, replace_subexpression, subexpression
from suspx.errors import NotARedex
from suspx.lambda_core.debruijn import Abs, App, Const, db_shift, DbTerm, Index


def db_beta_contract(body: DbTerm, arg: DbTerm) -> DbTerm:
    """
    Contract the redex (lambda body) arg.

    Parameters
    ----------
    body
        Body of the abstraction.
    arg
        Argument of the application.

    Returns
    -------
    :
        body with index 1 replaced by arg and every other free index decremented.
    """
    return _substitute(body, arg, 0)


def _substitute(t: DbTerm, arg: DbTerm, depth: int) -> DbTerm:
    if isinstance(t, Const):
        return t
    elif isinstance(t, Index):
        if t.i <= depth:
            return t
        elif t.i == depth + 1:
            return db_shift(arg, depth, 0)
        else:
            return Index(t.i - 1)
    elif isinstance(t, App):
        return App(_substitute(t.fun, arg, depth), _substitute(t.arg, arg, depth))
    elif isinstance(t, Abs):
        return Abs(_substitute(t.body, arg, depth + 1), t.ann)
    else:
        raise TypeError(f"Not a de Bruijn term: {t!r}")


def _is_beta_redex(t: Node) -> bool:
    return isinstance(t, App) and isinstance(t.fun, Abs)


def _contract(t: Node) -> Node:
    assert isinstance(t, App) and isinstance(t.fun, Abs)
    return db_beta_contract(t.fun.body, t.arg)


beta = Rule("beta", _is_beta_redex, _contract)


def beta_redexes(t: DbTerm) -> typing.List[Position]:
    """Return the positions of every beta-redex of t, in normal order."""
    return [position for (position, _) in enumerate_redexes(t, [beta])]


def beta_step(t: DbTerm, position: Position) -> DbTerm:
    """Contract the beta-redex at position."""
    redex = subexpression(t, position)
    if not _is_beta_redex(redex):
        raise NotARedex(f"{redex!r} is not a beta-redex")
    return replace_subexpression(t, position, _contract(redex))


def beta_normalize(t: DbTerm, budget: int) -> DbTerm:
    """
    Reduce t to beta-normal form by repeatedly contracting the leftmost outermost redex.

    Parameters
    ----------
    t
        Term to be normalized.
    budget
        Maximum number of contractions.

    Returns
    -------
    :
        The beta-normal form of t. BudgetExhausted is raised, carrying the partially reduced term,
        when more than budget contractions would be needed.
    """
    normal_form, _ = reduce(t, [beta], budget=budget, record=False)
    return normal_form


def _head_redex(t: Node, rules: typing.Sequence[Rule]) -> typing.Optional[typing.Tuple[Position, Rule]]:
    position: Position = ()
    while True:
        if isinstance(t, Abs):
            t, position = t.body, position + (0, )
        elif isinstance(t, App):
            if isinstance(t.fun, Abs):
                return position, beta
            t, position = t.fun, position + (0, )
        else:
            return None


def beta_derivation(
    t: DbTerm, budget: int, head_only: bool = False
) -> typing.Tuple[DbTerm, typing.List[TraceStep]]:
    """
    Reduce t and record the contracted redexes.

    Parameters
    ----------
    t
        Term to be reduced.
    budget
        Maximum number of contractions.
    head_only
        Whether to stop at the head normal form, contracting only the redex at the head of t.
        Otherwise the leftmost outermost redex is contracted until t is beta-normal.

    Returns
    -------
    :
        A tuple containing the reached normal form and the derivation leading to it.
    """
    return reduce(t, [beta], budget=budget, select=_head_redex if head_only else leftmost_outermost)
