# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""The lambda-s and lambda-s_e calculi and their translation into the suspension calculus."""

import collections
import dataclasses
import enum
import logging
import typing

from suspx import defaults
from suspx._backends.rewriting import (
    apply_rule as apply_node_rule, enumerate_redexes, leftmost_outermost, reduce, Rule, TraceStep)
from suspx._backends.tree import Node, Position, replace_subexpression, subexpression
from suspx.calculi._engine import step, table
from suspx.errors import RuleNotApplicable, TranslationError
from suspx.lambda_core.debruijn import Abs, App, Index
from suspx.rewrite.rules import MetaMode, READING, rules_for
from suspx.syntax.expressions import Cons, EnvTerm, Nil, Susp

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Sigma(Node):
    """The closure substituting a renumbered version of arg for the index i of term."""

    term: Node
    i: int
    arg: Node

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("term", "arg")


@dataclasses.dataclass(frozen=True)
class Phi(Node):
    """The update increasing by i - 1 every index of term greater than k."""

    k: int
    i: int
    term: Node

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("term", )


class LsRuleset(enum.Enum):
    """Rules enabled during normalization."""

    S = "s"
    FULL = "full"
    SE_FULL = "se-full"


def _sigma_over(term_type: typing.Type[Node]) -> typing.Callable[[Node], bool]:
    return lambda x: isinstance(x, Sigma) and isinstance(x.term, term_type)


def _phi_over(term_type: typing.Type[Node]) -> typing.Callable[[Node], bool]:
    return lambda x: isinstance(x, Phi) and isinstance(x.term, term_type)


def _sigma_generation(x: Node) -> Node:
    assert isinstance(x, App) and isinstance(x.fun, Abs)
    return Sigma(x.fun.body, 1, x.arg)


def _sigma_lambda(x: Node) -> Node:
    assert isinstance(x, Sigma) and isinstance(x.term, Abs)
    return Abs(Sigma(x.term.body, x.i + 1, x.arg))


def _sigma_app(x: Node) -> Node:
    assert isinstance(x, Sigma) and isinstance(x.term, App)
    return App(Sigma(x.term.fun, x.i, x.arg), Sigma(x.term.arg, x.i, x.arg))


def _sigma_destruction(x: Node) -> Node:
    assert isinstance(x, Sigma) and isinstance(x.term, Index)
    n = x.term.i
    if n > x.i:
        return Index(n - 1)
    elif n == x.i:
        return Phi(0, x.i, x.arg)
    else:
        return x.term


def _phi_lambda(x: Node) -> Node:
    assert isinstance(x, Phi) and isinstance(x.term, Abs)
    return Abs(Phi(x.k + 1, x.i, x.term.body))


def _phi_app(x: Node) -> Node:
    assert isinstance(x, Phi) and isinstance(x.term, App)
    return App(Phi(x.k, x.i, x.term.fun), Phi(x.k, x.i, x.term.arg))


def _phi_destruction(x: Node) -> Node:
    assert isinstance(x, Phi) and isinstance(x.term, Index)
    n = x.term.i
    if n > x.k:
        return Index(n + x.i - 1)
    else:
        return x.term


def _sigma_sigma_matches(x: Node) -> bool:
    return isinstance(x, Sigma) and isinstance(x.term, Sigma) and x.term.i <= x.i


def _sigma_sigma(x: Node) -> Node:
    assert isinstance(x, Sigma) and isinstance(x.term, Sigma)
    inner, j = x.term, x.i
    return Sigma(Sigma(inner.term, j + 1, x.arg), inner.i, Sigma(inner.arg, j - inner.i + 1, x.arg))


def _sigma_phi_1_matches(x: Node) -> bool:
    return isinstance(x, Sigma) and isinstance(x.term, Phi) and x.term.k < x.i < x.term.k + x.term.i


def _sigma_phi_1(x: Node) -> Node:
    assert isinstance(x, Sigma) and isinstance(x.term, Phi)
    return Phi(x.term.k, x.term.i - 1, x.term.term)


def _sigma_phi_2_matches(x: Node) -> bool:
    return isinstance(x, Sigma) and isinstance(x.term, Phi) and x.term.k + x.term.i <= x.i


def _sigma_phi_2(x: Node) -> Node:
    assert isinstance(x, Sigma) and isinstance(x.term, Phi)
    inner = x.term
    return Phi(inner.k, inner.i, Sigma(inner.term, x.i - inner.i + 1, x.arg))


def _phi_sigma_matches(x: Node) -> bool:
    return isinstance(x, Phi) and isinstance(x.term, Sigma) and x.term.i <= x.k + 1


def _phi_sigma(x: Node) -> Node:
    assert isinstance(x, Phi) and isinstance(x.term, Sigma)
    inner = x.term
    return Sigma(Phi(x.k + 1, x.i, inner.term), inner.i, Phi(x.k + 1 - inner.i, x.i, inner.arg))


def _phi_phi_1_matches(x: Node) -> bool:
    return isinstance(x, Phi) and isinstance(x.term, Phi) and x.term.k + x.term.i <= x.k


def _phi_phi_1(x: Node) -> Node:
    assert isinstance(x, Phi) and isinstance(x.term, Phi)
    inner = x.term
    return Phi(inner.k, inner.i, Phi(x.k + 1 - inner.i, x.i, inner.term))


def _phi_phi_2_matches(x: Node) -> bool:
    return isinstance(x, Phi) and isinstance(x.term, Phi) and x.term.k <= x.k < x.term.k + x.term.i


def _phi_phi_2(x: Node) -> Node:
    assert isinstance(x, Phi) and isinstance(x.term, Phi)
    return Phi(x.term.k, x.term.i + x.i - 1, x.term.term)


SIGMA_GENERATION = Rule("ls.sigma-generation", lambda x: isinstance(x, App) and isinstance(x.fun, Abs),
                        _sigma_generation)

S_RULES = table(
    Rule("ls.sigma-lambda", _sigma_over(Abs), _sigma_lambda),
    Rule("ls.sigma-app", _sigma_over(App), _sigma_app),
    Rule("ls.sigma-destruction", _sigma_over(Index), _sigma_destruction),
    Rule("ls.phi-lambda", _phi_over(Abs), _phi_lambda),
    Rule("ls.phi-app", _phi_over(App), _phi_app),
    Rule("ls.phi-destruction", _phi_over(Index), _phi_destruction)
)

SE_RULES = table(
    Rule("se.sigma-sigma", _sigma_sigma_matches, _sigma_sigma),
    Rule("se.sigma-phi-1", _sigma_phi_1_matches, _sigma_phi_1),
    Rule("se.sigma-phi-2", _sigma_phi_2_matches, _sigma_phi_2),
    Rule("se.phi-sigma", _phi_sigma_matches, _phi_sigma),
    Rule("se.phi-phi-1", _phi_phi_1_matches, _phi_phi_1),
    Rule("se.phi-phi-2", _phi_phi_2_matches, _phi_phi_2)
)

RULES = table(SIGMA_GENERATION, *S_RULES.values(), *SE_RULES.values())


def ls_step(a: Node, position: Position, rule_id: str) -> Node:
    """Contract the redex of the lambda-s or lambda-s_e rule called rule_id at position."""
    return step(a, RULES, position, rule_id)


def ls_normalize(
    a: Node, budget: typing.Optional[int] = None, ruleset: LsRuleset = LsRuleset.S, record: bool = True
) -> typing.Tuple[Node, typing.List[TraceStep]]:
    """
    Normalize a lambda-s term, contracting the leftmost outermost redex first.

    Parameters
    ----------
    a
        Term to be normalized.
    budget
        Maximum number of budgeted steps, defaulting to suspx.defaults.MAX_STEPS. The s rules alone always
        terminate and ignore it; the full ruleset counts sigma-generation steps, while the lambda-s_e ruleset
        counts every step because its additional rules may loop.
    ruleset
        Rules to be used.
    record
        Whether to record the derivation.

    Returns
    -------
    :
        A tuple containing the normal form and the derivation leading to it.
    """
    budget = budget if budget is not None else defaults.MAX_STEPS
    if ruleset == LsRuleset.S:
        return reduce(a, list(S_RULES.values()), fuel=defaults.RM_FUEL, record=record)
    elif ruleset == LsRuleset.FULL:
        return reduce(
            a, [SIGMA_GENERATION, *S_RULES.values()], budget=budget,
            budgeted=frozenset([SIGMA_GENERATION.rule_id]), fuel=defaults.RM_FUEL, record=record)
    else:
        return reduce(a, list(RULES.values()), budget=budget, record=record)


def ls_to_susp(a: Node) -> Node:
    """
    Translate a lambda-s term into a suspension term.

    Closures and updates become suspensions whose environments start with entries of the form (#1, l).
    """
    if isinstance(a, Index):
        return a
    elif isinstance(a, App):
        return App(ls_to_susp(a.fun), ls_to_susp(a.arg))
    elif isinstance(a, Abs):
        return Abs(ls_to_susp(a.body))
    elif isinstance(a, Sigma):
        e: Node = Cons(EnvTerm(ls_to_susp(a.arg), 0), Nil())
        for level in range(1, a.i):
            e = Cons(EnvTerm(Index(1), level), e)
        return Susp(ls_to_susp(a.term), a.i, a.i - 1, e)
    elif isinstance(a, Phi):
        e = Nil()
        for level in range(a.i, a.k + a.i):
            e = Cons(EnvTerm(Index(1), level), e)
        return Susp(ls_to_susp(a.term), a.k, a.k + a.i - 1, e)
    else:
        raise TranslationError(f"{type(a).__name__} is not a lambda-s term")


def ls_position_to_susp(a: Node, position: Position) -> Position:
    """Map a position of the lambda-s term a to the position of the corresponding subterm of ls_to_susp(a)."""
    result: typing.List[int] = []
    current = a
    for ordinal in position:
        if isinstance(current, Sigma) and ordinal == 1:
            # The argument sits in the last entry, after i - 1 dummy entries.
            result.extend([1] + [1] * (current.i - 1) + [0, 0])
        else:
            result.append(ordinal)
        current = subexpression(current, (ordinal, ))
    return tuple(result)


def certify_simulation(
    a: Node, position: Position, rule_id: str, depth: typing.Optional[int] = None
) -> typing.Optional[typing.List[TraceStep]]:
    """
    Find a derivation made of reading steps only that simulates one s-step.

    Parameters
    ----------
    a
        Lambda-s term.
    position
        Position of the contracted redex.
    rule_id
        Identifier of one of the s rules.
    depth
        Depth of the breadth-first fallback search, defaulting to suspx.defaults.SEARCH_DEPTH.

    Returns
    -------
    :
        A non-empty derivation from ls_to_susp(a) to the translation of the contractum, or None if none was found.
    """
    if rule_id not in S_RULES:
        raise RuleNotApplicable(f"{rule_id!r} is not one of the s rules")
    b = step(a, S_RULES, position, rule_id)
    source = ls_to_susp(subexpression(a, position))
    target = ls_to_susp(subexpression(b, position))
    local_path = _reading_path(source, target, depth if depth is not None else defaults.SEARCH_DEPTH)
    if local_path is None:
        return None
    # Reduction is closed under contexts: replay the local path inside the translation of a.
    context = ls_to_susp(a)
    offset = ls_position_to_susp(a, position)
    return [
        TraceStep(
            local.rule, offset + local.position, replace_subexpression(context, offset, local.before),
            replace_subexpression(context, offset, local.after), local.step_index)
        for local in local_path]


def _reading_path(source: Node, target: Node, depth: int) -> typing.Optional[typing.List[TraceStep]]:
    rules = rules_for(READING, MetaMode.GRAFTABLE)
    path: typing.List[TraceStep] = []
    x = source
    while True:
        redex = leftmost_outermost(x, rules)
        if redex is None:
            break
        after = apply_node_rule(x, redex[1], redex[0])
        path.append(TraceStep(redex[1].rule_id, redex[0], x, after, len(path)))
        if after == target:
            return path
        x = after
    logger.warning("Leftmost outermost reading missed the target, falling back to breadth-first search")
    parents: typing.Dict[Node, typing.Optional[TraceStep]] = {source: None}
    frontier = collections.deque([(source, 0)])
    while len(frontier) > 0:
        x, distance = frontier.popleft()
        if distance >= depth:
            continue
        for (position, rule) in enumerate_redexes(x, rules):
            after = apply_node_rule(x, rule, position)
            if after in parents:
                continue
            parents[after] = TraceStep(rule.rule_id, position, x, after, distance)
            if after == target:
                return _unwind(parents, after)
            frontier.append((after, distance + 1))
    logger.info("No reading derivation within depth %d", depth)
    return None


def _unwind(parents: typing.Dict[Node, typing.Optional[TraceStep]], x: Node) -> typing.List[TraceStep]:
    path: typing.List[TraceStep] = []
    last = parents[x]
    while last is not None:
        path.append(last)
        last = parents[last.before]
    path.reverse()
    return path
