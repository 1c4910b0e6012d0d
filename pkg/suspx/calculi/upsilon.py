# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""The lambda-upsilon calculus and its translation into the suspension calculus."""

import dataclasses
import enum
import logging
import typing

from suspx import defaults
from suspx._backends.rewriting import reduce, Rule, TraceStep
from suspx._backends.tree import Node, Position
from suspx.calculi._engine import step, table
from suspx.errors import TranslationError
from suspx.lambda_core.debruijn import Abs, App, Index
from suspx.syntax.expressions import Cons, EnvTerm, Nil, Susp

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class UpsClosure(Node):
    """The closure a[s]."""

    term: Node
    sub: Node

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("term", "sub")


@dataclasses.dataclass(frozen=True)
class Slash(Node):
    """The substitution a/, replacing the first index by a and decrementing the other ones."""

    term: Node

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("term", )


@dataclasses.dataclass(frozen=True)
class Lift(Node):
    """The substitution lifting sub under one binder."""

    sub: Node

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("sub", )


@dataclasses.dataclass(frozen=True)
class UpsShift(Node):
    """The substitution incrementing every index."""


class UpsRuleset(enum.Enum):
    """Rules enabled during normalization: the upsilon rules alone, or together with (B)."""

    UPSILON = "upsilon"
    FULL = "full"


def _closure_over(term_type: typing.Type[Node], sub_type: typing.Type[Node]) -> typing.Callable[[Node], bool]:
    return lambda x: isinstance(x, UpsClosure) and isinstance(x.term, term_type) and isinstance(x.sub, sub_type)


def _first_index_under(sub_type: typing.Type[Node]) -> typing.Callable[[Node], bool]:
    return lambda x: isinstance(x, UpsClosure) and x.term == Index(1) and isinstance(x.sub, sub_type)


def _rest_index_under(sub_type: typing.Type[Node]) -> typing.Callable[[Node], bool]:
    return lambda x: (
        isinstance(x, UpsClosure) and isinstance(x.term, Index) and x.term.i > 1 and isinstance(x.sub, sub_type))


def _b(x: Node) -> Node:
    assert isinstance(x, App) and isinstance(x.fun, Abs)
    return UpsClosure(x.fun.body, Slash(x.arg))


def _app(x: Node) -> Node:
    assert isinstance(x, UpsClosure) and isinstance(x.term, App)
    return App(UpsClosure(x.term.fun, x.sub), UpsClosure(x.term.arg, x.sub))


def _lambda(x: Node) -> Node:
    assert isinstance(x, UpsClosure) and isinstance(x.term, Abs)
    return Abs(UpsClosure(x.term.body, Lift(x.sub)))


def _fvar(x: Node) -> Node:
    assert isinstance(x, UpsClosure) and isinstance(x.sub, Slash)
    return x.sub.term


def _rvar(x: Node) -> Node:
    assert isinstance(x, UpsClosure) and isinstance(x.term, Index)
    return Index(x.term.i - 1)


def _var_shift(x: Node) -> Node:
    assert isinstance(x, UpsClosure) and isinstance(x.term, Index)
    return Index(x.term.i + 1)


def _fvar_lift(x: Node) -> Node:
    return Index(1)


def _rvar_lift(x: Node) -> Node:
    assert isinstance(x, UpsClosure) and isinstance(x.term, Index) and isinstance(x.sub, Lift)
    return UpsClosure(UpsClosure(Index(x.term.i - 1), x.sub.sub), UpsShift())


B = Rule("ups.B", lambda x: isinstance(x, App) and isinstance(x.fun, Abs), _b)

UPSILON_RULES = table(
    Rule("ups.App", _closure_over(App, Node), _app),
    Rule("ups.Lambda", _closure_over(Abs, Node), _lambda),
    Rule("ups.FVar", _first_index_under(Slash), _fvar),
    Rule("ups.RVar", _rest_index_under(Slash), _rvar),
    Rule("ups.VarShift", _closure_over(Index, UpsShift), _var_shift),
    Rule("ups.FVarLift", _first_index_under(Lift), _fvar_lift),
    Rule("ups.RVarLift", _rest_index_under(Lift), _rvar_lift)
)

RULES = table(B, *UPSILON_RULES.values())


def ups_step(a: Node, position: Position, rule_id: str) -> Node:
    """Contract the redex of the lambda-upsilon rule called rule_id at position."""
    return step(a, RULES, position, rule_id)


def ups_normalize(
    a: Node, budget: typing.Optional[int] = None, ruleset: UpsRuleset = UpsRuleset.UPSILON, record: bool = True
) -> typing.Tuple[Node, typing.List[TraceStep]]:
    """
    Normalize a lambda-upsilon expression, contracting the leftmost outermost redex first.

    Parameters
    ----------
    a
        Term or substitution.
    budget
        Maximum number of (B) steps, defaulting to suspx.defaults.MAX_STEPS. Ignored by the upsilon rules alone,
        which always terminate.
    ruleset
        Rules to be used.
    record
        Whether to record the derivation.

    Returns
    -------
    :
        A tuple containing the normal form and the derivation leading to it.
    """
    if ruleset == UpsRuleset.UPSILON:
        return reduce(a, list(UPSILON_RULES.values()), fuel=defaults.RM_FUEL, record=record)
    else:
        return reduce(
            a, list(RULES.values()), budget=budget if budget is not None else defaults.MAX_STEPS,
            budgeted=frozenset([B.rule_id]), fuel=defaults.RM_FUEL, record=record)


def ups_to_susp(a: Node) -> Node:
    """
    Translate a lambda-upsilon term into a suspension term.

    Closures become suspensions whose levels and environment are given by ups_sub_to_env.
    """
    if isinstance(a, Index):
        return a
    elif isinstance(a, App):
        return App(ups_to_susp(a.fun), ups_to_susp(a.arg))
    elif isinstance(a, Abs):
        return Abs(ups_to_susp(a.body))
    elif isinstance(a, UpsClosure):
        ol, nl, e = ups_sub_to_env(a.sub)
        return Susp(ups_to_susp(a.term), ol, nl, e)
    else:
        raise TranslationError(f"{type(a).__name__} is not a lambda-upsilon term")


def ups_sub_to_env(s: Node) -> typing.Tuple[int, int, Node]:
    """Translate a lambda-upsilon substitution into an old embedding level, a new one and an environment."""
    lifts = 0
    while isinstance(s, Lift):
        lifts += 1
        s = s.sub
    if isinstance(s, Slash):
        ol, nl, e = 1, 0, Cons(EnvTerm(ups_to_susp(s.term), 0), Nil())
    elif isinstance(s, UpsShift):
        ol, nl, e = 0, 1, Nil()
    else:
        raise TranslationError(f"{type(s).__name__} is not a lambda-upsilon substitution")
    for _ in range(lifts):
        ol, nl = ol + 1, nl + 1
        e = Cons(EnvTerm(Index(1), nl), e)
    return ol, nl, e
