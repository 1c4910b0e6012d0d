# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Tests for suspx.test.strategies and suspx.test.paths modules."""

import hypothesis
import hypothesis.strategies
import pytest

import suspx._backends.tree
import suspx.rewrite
import suspx.syntax
import suspx.test
from suspx.lambda_core import Abs, App, Const, Index

seeds = hypothesis.strategies.integers(0, 2**31 - 1)
c = Const("c")
d = Const("d")


@pytest.mark.parametrize("source,target,expected", [
    (c, c, []),
    (App(Abs(Index(1)), c), c, [()]),
    (App(c, App(Abs(Index(1)), d)), App(c, d), [(1, )]),
    (c, d, None)
])
def test_beta_path_search(
    source: suspx._backends.tree.Node, target: suspx._backends.tree.Node, expected: object
) -> None:
    """Search for shortest beta paths."""
    assert suspx.test.beta_path_search(source, target, 100) == expected


@hypothesis.given(seeds, seeds, hypothesis.strategies.integers(1, 20), hypothesis.strategies.integers(0, 20))
def test_random_derivation(seed: int, derivation_seed: int, size: int, steps: int) -> None:
    """Check that random derivations are made of consecutive steps preserving wellformedness."""
    x = suspx.syntax.gen_expr(seed, size, allow_meta=True)
    y, trace = suspx.test.random_derivation(x, derivation_seed, steps)
    assert len(trace) <= steps
    assert suspx.syntax.check_wellformed(y) is None
    current = x
    for step in trace:
        assert step.before == current
        assert suspx.rewrite.apply_rule(step.before, suspx.rewrite.RuleId(step.rule), step.position) == step.after
        current = step.after
    assert current == y


@hypothesis.given(seeds, seeds, hypothesis.strategies.integers(1, 20))
def test_random_rm_normalize(seed: int, strategy_seed: int, size: int) -> None:
    """Check that random strategies reach a reading and merging normal form."""
    x = suspx.syntax.gen_expr(seed, size, allow_meta=True)
    y = suspx.test.random_rm_normalize(x, strategy_seed)
    assert suspx.rewrite.enumerate_redexes(y, suspx.rewrite.READING_AND_MERGING) == []
