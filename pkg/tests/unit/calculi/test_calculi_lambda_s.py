# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Tests for suspx.calculi.lambda_s module."""

import hypothesis
import hypothesis.strategies
import pytest

import suspx._backends.rewriting
import suspx._backends.tree
import suspx.calculi
import suspx.calculi.lambda_s
import suspx.errors
import suspx.rewrite
import suspx.test
from suspx.calculi import LsRuleset, Phi, Sigma
from suspx.lambda_core import Abs, App, Index
from suspx.syntax import env_list, Nil, Susp

seeds = hypothesis.strategies.integers(0, 2**31 - 1)
sizes = hypothesis.strategies.integers(1, 12)
a = Index(7)
b = Index(8)
c = Index(9)


@pytest.mark.parametrize("x,rule_id,expected", [
    (Sigma(Index(3), 1, b), "ls.sigma-destruction", Index(2)),
    (Sigma(Index(1), 1, b), "ls.sigma-destruction", Phi(0, 1, b)),
    (Sigma(Index(1), 2, b), "ls.sigma-destruction", Index(1)),
    (Phi(1, 3, Index(2)), "ls.phi-destruction", Index(4)),
    (Phi(1, 3, Index(1)), "ls.phi-destruction", Index(1)),
    (Sigma(Abs(a), 1, b), "ls.sigma-lambda", Abs(Sigma(a, 2, b))),
    (Phi(0, 2, App(a, b)), "ls.phi-app", App(Phi(0, 2, a), Phi(0, 2, b))),
    (App(Abs(a), b), "ls.sigma-generation", Sigma(a, 1, b)),
    (Sigma(Sigma(a, 1, b), 2, c), "se.sigma-sigma", Sigma(Sigma(a, 3, c), 1, Sigma(b, 2, c)))
])
def test_ls_step(
    x: suspx._backends.tree.Node, rule_id: str, expected: suspx._backends.tree.Node
) -> None:
    """Contract each kind of redex at the root."""
    assert suspx.calculi.ls_step(x, (), rule_id) == expected


def test_ls_normalize() -> None:
    """Normalize with the s rules, with and without sigma-generation."""
    redex = App(Abs(App(Index(1), Index(2))), Index(5))
    normal_form, _ = suspx.calculi.ls_normalize(redex)
    assert normal_form == redex
    normal_form, trace = suspx.calculi.ls_normalize(redex, ruleset=LsRuleset.FULL)
    assert normal_form == App(Index(5), Index(1))
    assert trace[0].rule == "ls.sigma-generation"
    normal_form, _ = suspx.calculi.ls_normalize(redex, ruleset=LsRuleset.SE_FULL)
    assert normal_form == App(Index(5), Index(1))


def test_ls_normalize_budget_exhausted() -> None:
    """Check that divergent terms run out of budget."""
    delta = Abs(App(Index(1), Index(1)))
    with pytest.raises(suspx.errors.BudgetExhausted):
        suspx.calculi.ls_normalize(App(delta, delta), 10, LsRuleset.FULL)


@pytest.mark.parametrize("x,expected", [
    (Sigma(a, 2, b), Susp(a, 2, 1, env_list((Index(1), 1), (b, 0)))),
    (Phi(1, 2, a), Susp(a, 1, 2, env_list((Index(1), 2)))),
    (Phi(0, 3, a), Susp(a, 0, 2, Nil())),
    (Index(3), Index(3))
])
def test_ls_to_susp(x: suspx._backends.tree.Node, expected: suspx._backends.tree.Node) -> None:
    """Translate closures and updates into suspensions."""
    assert suspx.calculi.ls_to_susp(x) == expected


def test_ls_position_to_susp() -> None:
    """Map the position of the argument of a closure to the matching environment entry."""
    x = Abs(Sigma(a, 2, App(b, c)))
    position = suspx.calculi.ls_position_to_susp(x, (0, 1, 1))
    assert position == (0, 1, 1, 0, 0, 1)
    assert suspx._backends.tree.subexpression(suspx.calculi.ls_to_susp(x), position) == c


def test_certify_simulation_destruction() -> None:
    """Simulate the replacement of the substituted index by reading steps."""
    x = Sigma(Index(2), 2, b)
    trace = suspx.calculi.certify_simulation(x, (), "ls.sigma-destruction")
    assert trace is not None
    assert [step.rule for step in trace] == ["r4", "r3"]
    assert trace[-1].after == suspx.calculi.ls_to_susp(Phi(0, 2, b))


def test_certify_simulation_rejects_other_rules() -> None:
    """Check that only the s rules are certified."""
    with pytest.raises(suspx.errors.RuleNotApplicable):
        suspx.calculi.certify_simulation(App(Abs(a), b), (), "ls.sigma-generation")


@hypothesis.given(seeds, sizes)
def test_s_steps_are_simulated_by_reading_steps(seed: int, size: int) -> None:
    """Check that every s step translates to a non-empty derivation of reading steps."""
    x = suspx.test.gen_lambda_s(seed, size)
    rules = list(suspx.calculi.lambda_s.S_RULES.values())
    for (position, rule) in suspx._backends.rewriting.enumerate_redexes(x, rules):
        trace = suspx.calculi.certify_simulation(x, position, rule.rule_id)
        assert trace is not None, rule.rule_id
        assert len(trace) > 0
        assert trace[0].before == suspx.calculi.ls_to_susp(x)
        assert trace[-1].after == suspx.calculi.ls_to_susp(suspx.calculi.ls_step(x, position, rule.rule_id))
        assert all(step.rule in {r.value for r in suspx.rewrite.READING} for step in trace)


@hypothesis.given(seeds, sizes)
def test_s_normal_forms_are_reading_normal_forms(seed: int, size: int) -> None:
    """Check that s normalization agrees with normalization of the translation."""
    x = suspx.test.gen_lambda_s(seed, size)
    normal_form, _ = suspx.calculi.ls_normalize(x)
    assert normal_form == suspx.rewrite.rm_normalize(suspx.calculi.ls_to_susp(x))
