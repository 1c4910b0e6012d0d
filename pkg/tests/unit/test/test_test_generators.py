# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Tests for suspx.test.generators module."""

import hypothesis
import hypothesis.strategies

import suspx._backends.tree
import suspx.calculi
import suspx.lambda_core
import suspx.rewrite
import suspx.syntax
import suspx.test
import suspx.typecheck
from suspx.lambda_core import Const, Index

seeds = hypothesis.strategies.integers(0, 2**31 - 1)
sizes = hypothesis.strategies.integers(1, 25)


@hypothesis.given(seeds, sizes)
def test_gen_named(seed: int, size: int) -> None:
    """Check that named terms are reproducible and bounded in size."""
    t = suspx.test.gen_named(seed, size)
    assert suspx.test.gen_named(seed, size) == t
    assert suspx._backends.tree.node_count(t) <= size


@hypothesis.given(seeds, sizes, hypothesis.strategies.integers(1, 5))
def test_gen_db(seed: int, size: int, max_index: int) -> None:
    """Check that de Bruijn terms respect the largest index and the exclusion of constants."""
    t = suspx.test.gen_db(seed, size, max_index, allow_const=False)
    assert suspx._backends.tree.node_count(t) <= size
    for (_, node) in suspx._backends.tree.preorder(t):
        assert not isinstance(node, Const)
        if isinstance(node, Index):
            assert node.i <= max_index


@hypothesis.given(seeds, sizes)
def test_gen_beta_step_pair(seed: int, size: int) -> None:
    """Check that the generated beta step is the contraction of a redex of the term."""
    t1, position, t2 = suspx.test.gen_beta_step_pair(seed, size)
    assert position in suspx.lambda_core.beta_redexes(t1)
    assert suspx.lambda_core.beta_step(t1, position) == t2


@hypothesis.given(seeds, sizes, hypothesis.strategies.booleans())
def test_gen_beta_s_step_pair(seed: int, size: int, allow_meta: bool) -> None:
    """Check that the generated beta_s step is the contraction of a redex of the term."""
    x1, position, x2 = suspx.test.gen_beta_s_step_pair(seed, size, allow_meta)
    assert suspx.syntax.check_wellformed(x1) is None
    assert suspx.rewrite.apply_rule(x1, suspx.rewrite.RuleId.BETA_S, position) == x2
    if not allow_meta:
        assert not suspx.syntax.contains_meta(x1)


@hypothesis.given(seeds, hypothesis.strategies.integers(1, 10), hypothesis.strategies.integers(0, 4))
def test_gen_similar_pair(seed: int, size: int, entries: int) -> None:
    """Check that generated environments are wellformed and similar."""
    left, right = suspx.test.gen_similar_pair(seed, size, entries)
    assert suspx.syntax.check_wellformed(left) is None
    assert suspx.syntax.check_wellformed(right) is None
    assert suspx.syntax.env_len(left) == suspx.syntax.env_len(right)
    assert suspx.rewrite.similar(left, right)


@hypothesis.given(seeds, hypothesis.strategies.integers(0, 3))
def test_gen_typed(seed: int, depth: int) -> None:
    """Check that generated terms are closed, annotated and of the intended type."""
    t, type_, sig = suspx.test.gen_typed(seed, depth)
    assert suspx.lambda_core.is_db_term(t)
    assert suspx.typecheck.typecheck_db(suspx.typecheck.Context(), sig, t) == type_


@hypothesis.given(seeds, sizes)
def test_gen_other_calculi(seed: int, size: int) -> None:
    """Check that terms of the other calculi are reproducible and translate to wellformed suspension terms."""
    for (generator, translate) in [
        (suspx.test.gen_upsilon, suspx.calculi.ups_to_susp),
        (suspx.test.gen_lambda_s, suspx.calculi.ls_to_susp),
        (suspx.test.gen_sigma, suspx.calculi.sigma_to_susp)
    ]:
        x = generator(seed, size)
        assert generator(seed, size) == x
        assert suspx.syntax.check_wellformed(translate(x)) is None
