# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""The beta_s, reading and merging rules of the suspension calculus."""

import enum
import typing

from suspx._backends.rewriting import Rule
from suspx._backends.tree import Node
from suspx.lambda_core.debruijn import Abs, App, Const, Index
from suspx.syntax.expressions import Cons, EnvTerm, Merged, MetaVar, Nil, Susp
from suspx.syntax.levels import check_level, monus


class RuleId(str, enum.Enum):
    """Identifiers of the rules, in the order in which they are tried at a single position."""

    BETA_S = "beta_s"
    R1 = "r1"
    R2 = "r2"
    R3 = "r3"
    R4 = "r4"
    R5 = "r5"
    R6 = "r6"
    R7 = "r7"
    M1 = "m1"
    M2 = "m2"
    M3 = "m3"
    M4 = "m4"
    M5 = "m5"
    M6 = "m6"


class MetaMode(enum.Enum):
    """Interpretation of meta variables: logical ones enable the erasure rule r7."""

    GRAFTABLE = "graftable"
    LOGICAL = "logical"


def _susp_over(*types: typing.Type[Node]) -> typing.Callable[[Node], bool]:
    return lambda x: isinstance(x, Susp) and isinstance(x.term, types)


def _beta_s(x: Node) -> Node:
    assert isinstance(x, App) and isinstance(x.fun, Abs)
    return Susp(x.fun.body, 1, 0, Cons(EnvTerm(x.arg, 0), Nil()))


def _suspended_leaf(x: Node) -> Node:
    assert isinstance(x, Susp)
    return x.term


def _r2_matches(x: Node) -> bool:
    return isinstance(x, Susp) and isinstance(x.term, Index) and x.ol == 0 and isinstance(x.env, Nil)


def _r2(x: Node) -> Node:
    assert isinstance(x, Susp) and isinstance(x.term, Index)
    return Index(check_level(x.term.i + x.nl))


def _r3_matches(x: Node) -> bool:
    return isinstance(x, Susp) and x.term == Index(1) and isinstance(x.env, Cons)


def _r3(x: Node) -> Node:
    assert isinstance(x, Susp) and isinstance(x.env, Cons)
    return Susp(x.env.head.term, 0, check_level(x.nl - x.env.head.level), Nil())


def _r4_matches(x: Node) -> bool:
    return isinstance(x, Susp) and isinstance(x.term, Index) and x.term.i > 1 and isinstance(x.env, Cons)


def _r4(x: Node) -> Node:
    assert isinstance(x, Susp) and isinstance(x.term, Index) and isinstance(x.env, Cons)
    return Susp(Index(x.term.i - 1), x.ol - 1, x.nl, x.env.tail)


def _r5(x: Node) -> Node:
    assert isinstance(x, Susp) and isinstance(x.term, App)
    return App(Susp(x.term.fun, x.ol, x.nl, x.env), Susp(x.term.arg, x.ol, x.nl, x.env))


def _r6(x: Node) -> Node:
    assert isinstance(x, Susp) and isinstance(x.term, Abs)
    ol = check_level(x.ol + 1)
    nl = check_level(x.nl + 1)
    return Abs(Susp(x.term.body, ol, nl, Cons(EnvTerm(Index(1), nl), x.env)), x.term.ann)


def _m1(x: Node) -> Node:
    assert isinstance(x, Susp) and isinstance(x.term, Susp)
    inner = x.term
    return Susp(
        inner.term, check_level(inner.ol + monus(x.ol, inner.nl)), check_level(x.nl + monus(inner.nl, x.ol)),
        Merged(inner.env, inner.nl, x.ol, x.env))


def _m2_matches(x: Node) -> bool:
    return isinstance(x, Merged) and x.ol2 == 0 and isinstance(x.e2, Nil)


def _m2(x: Node) -> Node:
    assert isinstance(x, Merged)
    return x.e1


def _m3_matches(x: Node) -> bool:
    return isinstance(x, Merged) and isinstance(x.e1, Nil) and x.nl1 == 0


def _m3(x: Node) -> Node:
    assert isinstance(x, Merged)
    return x.e2


def _m4_matches(x: Node) -> bool:
    return isinstance(x, Merged) and isinstance(x.e1, Nil) and x.nl1 >= 1 and isinstance(x.e2, Cons)


def _m5_matches(x: Node) -> bool:
    return (
        isinstance(x, Merged) and isinstance(x.e1, Cons) and x.nl1 > x.e1.head.level and isinstance(x.e2, Cons))


def _drop_right(x: Node) -> Node:
    assert isinstance(x, Merged) and isinstance(x.e2, Cons)
    return Merged(x.e1, x.nl1 - 1, x.ol2 - 1, x.e2.tail)


def _m6_matches(x: Node) -> bool:
    return (
        isinstance(x, Merged) and isinstance(x.e1, Cons) and x.nl1 == x.e1.head.level and isinstance(x.e2, Cons))


def _m6(x: Node) -> Node:
    assert isinstance(x, Merged) and isinstance(x.e1, Cons) and isinstance(x.e2, Cons)
    n = x.e1.head.level
    level = x.e2.head.level
    return Cons(
        EnvTerm(Susp(x.e1.head.term, x.ol2, level, x.e2), check_level(level + monus(n, x.ol2))),
        Merged(x.e1.tail, n, x.ol2, x.e2))


RULES: typing.Dict[RuleId, Rule] = {
    RuleId.BETA_S: Rule(RuleId.BETA_S.value, lambda x: isinstance(x, App) and isinstance(x.fun, Abs), _beta_s),
    RuleId.R1: Rule(RuleId.R1.value, _susp_over(Const), _suspended_leaf),
    RuleId.R2: Rule(RuleId.R2.value, _r2_matches, _r2),
    RuleId.R3: Rule(RuleId.R3.value, _r3_matches, _r3),
    RuleId.R4: Rule(RuleId.R4.value, _r4_matches, _r4),
    RuleId.R5: Rule(RuleId.R5.value, _susp_over(App), _r5),
    RuleId.R6: Rule(RuleId.R6.value, _susp_over(Abs), _r6),
    RuleId.R7: Rule(RuleId.R7.value, _susp_over(MetaVar), _suspended_leaf),
    RuleId.M1: Rule(RuleId.M1.value, _susp_over(Susp), _m1),
    RuleId.M2: Rule(RuleId.M2.value, _m2_matches, _m2),
    RuleId.M3: Rule(RuleId.M3.value, _m3_matches, _m3),
    RuleId.M4: Rule(RuleId.M4.value, _m4_matches, _drop_right),
    RuleId.M5: Rule(RuleId.M5.value, _m5_matches, _drop_right),
    RuleId.M6: Rule(RuleId.M6.value, _m6_matches, _m6)
}

READING = frozenset([RuleId.R1, RuleId.R2, RuleId.R3, RuleId.R4, RuleId.R5, RuleId.R6, RuleId.R7])
MERGING = frozenset([RuleId.M1, RuleId.M2, RuleId.M3, RuleId.M4, RuleId.M5, RuleId.M6])
READING_AND_MERGING = READING | MERGING
ALL_RULES = READING_AND_MERGING | {RuleId.BETA_S}


def rules_for(ruleset: typing.AbstractSet[RuleId], mode: MetaMode) -> typing.List[Rule]:
    """Return the rules of ruleset enabled in mode, in the order in which they are tried."""
    return [
        rule for (rule_id, rule) in RULES.items()
        if rule_id in ruleset and (rule_id != RuleId.R7 or mode == MetaMode.LOGICAL)]
