# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Tests for suspx.rewrite.normalize module."""

import hypothesis
import hypothesis.strategies
import pytest

import suspx.errors
import suspx.rewrite
import suspx.syntax
import suspx.test
from suspx.lambda_core import Abs, App, Const, Index
from suspx.rewrite import MetaMode, RuleId
from suspx.syntax import env_list, Merged, MetaVar, Nil, Susp

seeds = hypothesis.strategies.integers(0, 2**31 - 1)
sizes = hypothesis.strategies.integers(1, 20)
a = Const("a")
b = Const("b")
c = Const("c")
omega = App(Abs(App(Index(1), Index(1))), Abs(App(Index(1), Index(1))))


@pytest.mark.parametrize("x,expected", [
    (Susp(c, 1, 5, env_list((Const("d"), 0))), c),
    (Susp(Abs(Index(2)), 0, 1, Nil()), Abs(Index(3))),
    (Susp(Index(1), 1, 0, env_list((c, 0))), c),
    (App(Abs(Index(1)), c), App(Abs(Index(1)), c))
])
def test_rm_normalize(x: suspx.syntax.SuspExpr, expected: suspx.syntax.SuspExpr) -> None:
    """Compute reading and merging normal forms of small terms."""
    assert suspx.rewrite.rm_normalize(x) == expected


def test_rm_derivation() -> None:
    """Record the leftmost outermost reading and merging derivation."""
    normal_form, trace = suspx.rewrite.rm_derivation(Susp(Index(1), 1, 0, env_list((c, 0))))
    assert normal_form == c
    assert [step.rule for step in trace] == [RuleId.R3.value, RuleId.R1.value]
    assert trace[0].after == trace[1].before


def test_rm_normalize_keeps_graftable_meta_variables_suspended() -> None:
    """Check that suspended meta variables are only erased in logical mode."""
    x = Susp(MetaVar("t"), 0, 2, Nil())
    assert suspx.rewrite.rm_normalize(x) == x
    assert suspx.rewrite.rm_normalize(x, MetaMode.LOGICAL) == MetaVar("t")


@pytest.mark.parametrize("e,expected", [
    (Merged(Nil(), 0, 1, env_list((c, 0))), env_list((c, 0))),
    (Merged(env_list((MetaVar("t"), 0)), 0, 2, env_list((a, 1), (b, 0))),
     env_list((Susp(MetaVar("t"), 2, 1, env_list((a, 1), (b, 0))), 1), (a, 1), (b, 0))),
    (Merged(Nil(), 1, 1, env_list((c, 0))), Nil()),
    (env_list((c, 0)), env_list((c, 0)))
])
def test_env_to_simple(e: suspx.syntax.SuspEnv, expected: suspx.syntax.SuspEnv) -> None:
    """Evaluate merged environments."""
    result = suspx.rewrite.env_to_simple(e)
    assert result == expected
    assert suspx.syntax.is_simple(result)


def test_full_normalize_displayed_reduction() -> None:
    """Normalize ((\\ \\ ((\\ ?t) ?s1)) ?s2) with graftable meta variables."""
    x = App(Abs(Abs(App(Abs(MetaVar("t")), MetaVar("s1")))), MetaVar("s2"))
    e = env_list((Index(1), 1), (MetaVar("s2"), 0))
    expected = Abs(Susp(MetaVar("t"), 3, 1, env_list((Susp(MetaVar("s1"), 2, 1, e), 1), tail=e)))
    normal_form, trace = suspx.rewrite.full_normalize(x)
    assert normal_form == expected
    assert trace[0].rule == RuleId.BETA_S.value
    assert trace[0].position == ()
    assert [step.step_index for step in trace] == list(range(len(trace)))


def test_full_normalize_identity() -> None:
    """Normalize ((\\ #1) c)."""
    normal_form, trace = suspx.rewrite.full_normalize(App(Abs(Index(1)), c))
    assert normal_form == c
    assert [step.rule for step in trace] == [RuleId.BETA_S.value, RuleId.R3.value, RuleId.R1.value]


def test_full_normalize_budget_exhausted() -> None:
    """Check that the self application of the duplicator runs out of budget."""
    with pytest.raises(suspx.errors.BudgetExhausted) as excinfo:
        suspx.rewrite.full_normalize(omega, 50)
    assert excinfo.value.steps == 50
    assert suspx.syntax.check_wellformed(excinfo.value.partial) is None


def test_full_normalize_without_record() -> None:
    """Check that no derivation is returned when recording is disabled."""
    normal_form, trace = suspx.rewrite.full_normalize(App(Abs(Index(1)), c), record=False)
    assert normal_form == c
    assert trace == []


@hypothesis.given(seeds, seeds, sizes, hypothesis.strategies.sampled_from(list(MetaMode)))
def test_rm_normal_forms_are_unique(seed: int, strategy_seed: int, size: int, mode: MetaMode) -> None:
    """Check that random reading and merging strategies reach the leftmost outermost normal form."""
    x = suspx.syntax.gen_expr(seed, size, allow_meta=True)
    assert suspx.test.random_rm_normalize(x, strategy_seed, mode) == suspx.rewrite.rm_normalize(x, mode)


@hypothesis.given(seeds, seeds, sizes)
def test_rm_normal_forms_of_environments_are_unique(seed: int, strategy_seed: int, size: int) -> None:
    """Check that random strategies agree on environments too."""
    e = suspx.syntax.gen_env(seed, size, allow_meta=True)
    assert suspx.test.random_rm_normalize(e, strategy_seed) == suspx.rewrite.rm_normalize(e)


@hypothesis.given(seeds, sizes)
def test_rm_normal_forms_of_meta_free_terms_are_pure(seed: int, size: int) -> None:
    """Check that meta free terms lose every suspension."""
    x = suspx.syntax.gen_expr(seed, size, allow_meta=False)
    assert not suspx.syntax.contains_susp(suspx.rewrite.rm_normalize(x))


@hypothesis.given(seeds, sizes)
def test_reading_rules_suffice_for_simple_environments(seed: int, size: int) -> None:
    """Check that reading rules reach the normal form of terms whose environments are all simple."""
    x = suspx.rewrite.parallel_beta_step(suspx.test.gen_db(seed, size))
    assert suspx.rewrite.r_normalize(x) == suspx.rewrite.rm_normalize(x)


@hypothesis.given(seeds, hypothesis.strategies.integers(1, 12))
def test_beta_s_steps_are_simulated_by_beta_steps(seed: int, size: int) -> None:
    """Check that a beta_s step between meta free terms is a beta path between their normal forms."""
    x1, _, x2 = suspx.test.gen_beta_s_step_pair(seed, size)
    path = suspx.test.beta_path_search(suspx.rewrite.rm_normalize(x1), suspx.rewrite.rm_normalize(x2), 2000)
    assert path is not None


@hypothesis.given(seeds, sizes)
def test_beta_steps_are_simulated_by_beta_s_steps(seed: int, size: int) -> None:
    """Check that contracting the same beta_s-redex and normalizing gives the beta step."""
    t1, position, t2 = suspx.test.gen_beta_step_pair(seed, size)
    assert suspx.rewrite.rm_normalize(suspx.rewrite.apply_rule(t1, RuleId.BETA_S, position)) == t2


@hypothesis.given(seeds, seeds, hypothesis.strategies.integers(1, 12), hypothesis.strategies.integers(1, 10))
def test_full_normal_forms_are_unique(seed: int, derivation_seed: int, size: int, steps: int) -> None:
    """Check that random derivations do not change the normal form."""
    x = suspx.syntax.gen_expr(seed, size, allow_meta=True)
    y, _ = suspx.test.random_derivation(x, derivation_seed, steps)
    try:
        x_normal, _ = suspx.rewrite.full_normalize(x, 100, record=False)
        y_normal, _ = suspx.rewrite.full_normalize(y, 100, record=False)
    except suspx.errors.BudgetExhausted:
        hypothesis.assume(False)
    else:
        assert x_normal == y_normal


@hypothesis.given(seeds, sizes, hypothesis.strategies.integers(0, 3))
def test_env_to_simple_prunes_unreachable_entries(seed: int, size: int, extra: int) -> None:
    """Check that entries of the right environment lying below the left one are dropped."""
    e1 = suspx.syntax.gen_env(seed, size, allow_meta=True)
    e2 = suspx.syntax.gen_env(seed + 1, size, allow_meta=True)
    ol2 = suspx.syntax.env_len(e2)
    merged = Merged(e1, suspx.syntax.env_lev(e1) + ol2 + extra, ol2, e2)
    assert suspx.syntax.check_wellformed(merged) is None
    assert suspx.rewrite.env_to_simple(merged) == suspx.rewrite.env_to_simple(e1)


@hypothesis.given(seeds, sizes)
def test_env_to_simple_is_a_normal_form_for_merging(seed: int, size: int) -> None:
    """Check that evaluating merged environments preserves length and does not raise the level."""
    e = suspx.syntax.gen_env(seed, size, allow_meta=True)
    simple = suspx.rewrite.env_to_simple(e)
    assert suspx.syntax.is_simple(simple)
    assert suspx.syntax.env_len(simple) == suspx.syntax.env_len(e)
    assert suspx.syntax.env_lev(simple) <= suspx.syntax.env_lev(e)
    assert suspx.syntax.check_wellformed(simple) is None
