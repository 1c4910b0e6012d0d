# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""The lambda-sigma calculus."""

import dataclasses
import enum
import logging
import typing

from suspx import defaults
from suspx._backends.rewriting import reduce, Rule, TraceStep
from suspx._backends.tree import Node, Position
from suspx.calculi._engine import step, table
from suspx.errors import SigmaFuelExhausted
from suspx.lambda_core.debruijn import Abs, App

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class One(Node):
    """The first de Bruijn index, the only index literal of the calculus."""


@dataclasses.dataclass(frozen=True)
class SigClosure(Node):
    """The closure a[s]."""

    term: Node
    sub: Node

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("term", "sub")


@dataclasses.dataclass(frozen=True)
class Id(Node):
    """The identity substitution."""


@dataclasses.dataclass(frozen=True)
class SigShift(Node):
    """The substitution incrementing every index."""


@dataclasses.dataclass(frozen=True)
class Dot(Node):
    """The substitution a . s, sending the first index to a and the other ones through s."""

    term: Node
    sub: Node

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("term", "sub")


@dataclasses.dataclass(frozen=True)
class Comp(Node):
    """The composition s o t, applying s first."""

    left: Node
    right: Node

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("left", "right")


class SigmaRuleset(enum.Enum):
    """Rules enabled during normalization: the substitution rules alone, or together with (Beta)."""

    SIGMA = "sigma"
    FULL = "full"


def shifts(n: int) -> Node:
    """Return the left-nested composition of n shifts, n being positive."""
    assert n >= 1
    result: Node = SigShift()
    for _ in range(n - 1):
        result = Comp(result, SigShift())
    return result


def index(n: int) -> Node:
    """Encode the n-th de Bruijn index as One, closed by n - 1 composed shifts when n > 1."""
    assert n >= 1
    return One() if n == 1 else SigClosure(One(), shifts(n - 1))


def _closure_over(
    term_type: typing.Type[Node], sub_type: typing.Type[Node] = Node
) -> typing.Callable[[Node], bool]:
    return lambda x: isinstance(x, SigClosure) and isinstance(x.term, term_type) and isinstance(x.sub, sub_type)


def _comp_with_left(
    left_type: typing.Type[Node], right_type: typing.Type[Node] = Node
) -> typing.Callable[[Node], bool]:
    return lambda x: isinstance(x, Comp) and isinstance(x.left, left_type) and isinstance(x.right, right_type)


def _beta(x: Node) -> Node:
    assert isinstance(x, App) and isinstance(x.fun, Abs)
    return SigClosure(x.fun.body, Dot(x.arg, Id()))


def _app(x: Node) -> Node:
    assert isinstance(x, SigClosure) and isinstance(x.term, App)
    return App(SigClosure(x.term.fun, x.sub), SigClosure(x.term.arg, x.sub))


def _abs(x: Node) -> Node:
    assert isinstance(x, SigClosure) and isinstance(x.term, Abs)
    return Abs(SigClosure(x.term.body, Dot(One(), Comp(x.sub, SigShift()))))


def _clos(x: Node) -> Node:
    assert isinstance(x, SigClosure) and isinstance(x.term, SigClosure)
    return SigClosure(x.term.term, Comp(x.term.sub, x.sub))


def _map(x: Node) -> Node:
    assert isinstance(x, Comp) and isinstance(x.left, Dot)
    return Dot(SigClosure(x.left.term, x.right), Comp(x.left.sub, x.right))


def _ass(x: Node) -> Node:
    assert isinstance(x, Comp) and isinstance(x.left, Comp)
    return Comp(x.left.left, Comp(x.left.right, x.right))


def _var_cons(x: Node) -> Node:
    assert isinstance(x, SigClosure) and isinstance(x.sub, Dot)
    return x.sub.term


def _right(x: Node) -> Node:
    assert isinstance(x, Comp)
    return x.right


def _shift_cons(x: Node) -> Node:
    assert isinstance(x, Comp) and isinstance(x.right, Dot)
    return x.right.sub


BETA = Rule("sigma.Beta", lambda x: isinstance(x, App) and isinstance(x.fun, Abs), _beta)

SIGMA_RULES = table(
    Rule("sigma.App", _closure_over(App), _app),
    Rule("sigma.Abs", _closure_over(Abs), _abs),
    Rule("sigma.Clos", _closure_over(SigClosure), _clos),
    Rule("sigma.Map", _comp_with_left(Dot), _map),
    Rule("sigma.Ass", _comp_with_left(Comp), _ass),
    Rule("sigma.VarId", _closure_over(One, Id), lambda x: One()),
    Rule("sigma.VarCons", _closure_over(One, Dot), _var_cons),
    Rule("sigma.IdL", _comp_with_left(Id), _right),
    Rule("sigma.ShiftId", _comp_with_left(SigShift, Id), lambda x: SigShift()),
    Rule("sigma.ShiftCons", _comp_with_left(SigShift, Dot), _shift_cons)
)

RULES = table(BETA, *SIGMA_RULES.values())


def sigma_step(x: Node, position: Position, rule_id: str) -> Node:
    """Contract the redex of the lambda-sigma rule called rule_id at position."""
    return step(x, RULES, position, rule_id)


def sigma_normalize(
    x: Node, budget: typing.Optional[int] = None, ruleset: SigmaRuleset = SigmaRuleset.SIGMA, record: bool = True
) -> typing.Tuple[Node, typing.List[TraceStep]]:
    """
    Normalize a lambda-sigma term or substitution, contracting the leftmost outermost redex first.

    Parameters
    ----------
    x
        Term or substitution.
    budget
        Maximum number of (Beta) steps of the full ruleset, defaulting to suspx.defaults.MAX_STEPS.
    ruleset
        Rules to be used. The substitution rules alone run on suspx.defaults.SIGMA_FUEL and raise
        SigmaFuelExhausted when it runs out.
    record
        Whether to record the derivation.

    Returns
    -------
    :
        A tuple containing the normal form and the derivation leading to it.
    """
    if ruleset == SigmaRuleset.SIGMA:
        return reduce(
            x, list(SIGMA_RULES.values()), fuel=defaults.SIGMA_FUEL, fuel_error=SigmaFuelExhausted, record=record)
    else:
        return reduce(
            x, list(RULES.values()), budget=budget if budget is not None else defaults.MAX_STEPS,
            budgeted=frozenset([BETA.rule_id]), fuel=defaults.SIGMA_FUEL, fuel_error=SigmaFuelExhausted,
            record=record)
