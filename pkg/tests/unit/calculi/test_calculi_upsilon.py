# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Tests for suspx.calculi.upsilon module."""

import typing

import hypothesis
import hypothesis.strategies
import pytest

import suspx._backends.rewriting
import suspx._backends.tree
import suspx.calculi
import suspx.calculi.upsilon
import suspx.errors
import suspx.rewrite
import suspx.test
from suspx.calculi import Lift, Slash, UpsClosure, UpsRuleset, UpsShift
from suspx.lambda_core import Abs, App, Const, Index
from suspx.syntax import env_list, Nil, Susp

seeds = hypothesis.strategies.integers(0, 2**31 - 1)
sizes = hypothesis.strategies.integers(1, 15)


@pytest.mark.parametrize("a,rule_id,expected", [
    (UpsClosure(Index(1), Slash(Index(5))), "ups.FVar", Index(5)),
    (UpsClosure(Index(3), Slash(Index(5))), "ups.RVar", Index(2)),
    (UpsClosure(Index(3), UpsShift()), "ups.VarShift", Index(4)),
    (UpsClosure(Index(1), Lift(UpsShift())), "ups.FVarLift", Index(1)),
    (UpsClosure(Index(3), Lift(UpsShift())), "ups.RVarLift", UpsClosure(UpsClosure(Index(2), UpsShift()), UpsShift())),
    (UpsClosure(Abs(Index(1)), UpsShift()), "ups.Lambda", Abs(UpsClosure(Index(1), Lift(UpsShift())))),
    (App(Abs(Index(2)), Index(1)), "ups.B", UpsClosure(Index(2), Slash(Index(1))))
])
def test_ups_step(a: suspx._backends.tree.Node, rule_id: str, expected: suspx._backends.tree.Node) -> None:
    """Contract each kind of redex at the root."""
    assert suspx.calculi.ups_step(a, (), rule_id) == expected


def test_ups_step_not_applicable() -> None:
    """Check that rules are only contracted where they match."""
    with pytest.raises(suspx.errors.RuleNotApplicable):
        suspx.calculi.ups_step(Index(1), (), "ups.FVar")
    with pytest.raises(suspx.errors.RuleNotApplicable):
        suspx.calculi.ups_step(Index(1), (), "ups.Unknown")


def test_ups_normalize_lifted_substitution() -> None:
    """Normalize 4[^(^(^(#1/)))], which reads the substituted term through three binders."""
    a = UpsClosure(Index(4), Lift(Lift(Lift(Slash(Index(1))))))
    normal_form, trace = suspx.calculi.ups_normalize(a)
    assert normal_form == Index(4)
    assert trace[0].rule == "ups.RVarLift"


def test_ups_normalize_full() -> None:
    """Normalize a beta-redex with the whole ruleset."""
    normal_form, _ = suspx.calculi.ups_normalize(App(Abs(Index(1)), Index(5)), ruleset=UpsRuleset.FULL)
    assert normal_form == Index(5)
    normal_form, _ = suspx.calculi.ups_normalize(App(Abs(Index(1)), Index(5)))
    assert normal_form == App(Abs(Index(1)), Index(5))


@pytest.mark.parametrize("s,expected", [
    (UpsShift(), (0, 1, Nil())),
    (Slash(Index(5)), (1, 0, env_list((Index(5), 0)))),
    (Lift(Slash(Index(5))), (2, 1, env_list((Index(1), 1), (Index(5), 0))))
])
def test_ups_sub_to_env(
    s: suspx._backends.tree.Node, expected: typing.Tuple[int, int, suspx._backends.tree.Node]
) -> None:
    """Translate substitutions into environments."""
    assert suspx.calculi.ups_sub_to_env(s) == expected


def test_ups_to_susp() -> None:
    """Translate closures into suspensions."""
    a = App(UpsClosure(Index(3), UpsShift()), Abs(Index(1)))
    assert suspx.calculi.ups_to_susp(a) == App(Susp(Index(3), 0, 1, Nil()), Abs(Index(1)))
    with pytest.raises(suspx.errors.TranslationError):
        suspx.calculi.ups_to_susp(Const("c"))


@hypothesis.given(seeds, sizes)
def test_upsilon_steps_have_common_reducts(seed: int, size: int) -> None:
    """Check that the two sides of an upsilon step translate to terms with the same normal form."""
    a = suspx.test.gen_upsilon(seed, size)
    rules = list(suspx.calculi.upsilon.UPSILON_RULES.values())
    expected = suspx.rewrite.rm_normalize(suspx.calculi.ups_to_susp(a))
    for (position, rule) in suspx._backends.rewriting.enumerate_redexes(a, rules):
        b = suspx.calculi.ups_step(a, position, rule.rule_id)
        assert suspx.rewrite.rm_normalize(suspx.calculi.ups_to_susp(b)) == expected, rule.rule_id


@hypothesis.given(seeds, sizes)
def test_upsilon_normal_forms_are_reading_normal_forms(seed: int, size: int) -> None:
    """Check that upsilon normalization agrees with normalization of the translation."""
    a = suspx.test.gen_upsilon(seed, size)
    normal_form, _ = suspx.calculi.ups_normalize(a)
    assert normal_form == suspx.rewrite.rm_normalize(suspx.calculi.ups_to_susp(a))
