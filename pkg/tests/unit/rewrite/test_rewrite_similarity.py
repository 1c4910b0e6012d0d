# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Tests for suspx.rewrite.similarity module."""

import hypothesis
import hypothesis.strategies
import pytest

import suspx.rewrite
import suspx.syntax
import suspx.test
from suspx.lambda_core import Abs, Const, Index
from suspx.syntax import env_list, Nil, Susp

seeds = hypothesis.strategies.integers(0, 2**31 - 1)
c = Const("c")


@pytest.mark.parametrize("x,y,expected", [
    (env_list((Susp(c, 0, 2, Nil()), 3)), env_list((Susp(c, 0, 5, Nil()), 6)), True),
    (env_list((Susp(c, 0, 2, Nil()), 3)), env_list((Susp(c, 0, 5, Nil()), 7)), False),
    (env_list((Susp(c, 0, 2, Nil()), 1)), env_list((Susp(c, 0, 5, Nil()), 4)), False),
    (env_list((c, 3)), env_list((c, 4)), False),
    (Abs(Susp(Index(1), 0, 1, Nil())), Abs(Susp(Index(1), 0, 1, Nil())), True),
    (Abs(Index(1)), Index(1), False)
])
def test_similar(x: suspx.syntax.SuspExpr, y: suspx.syntax.SuspExpr, expected: bool) -> None:
    """Decide similarity of small expressions."""
    assert suspx.rewrite.similar(x, y) is expected
    assert suspx.rewrite.similar(y, x) is expected


@hypothesis.given(seeds, hypothesis.strategies.integers(1, 20))
def test_similar_is_reflexive(seed: int, size: int) -> None:
    """Check that every expression is similar to itself."""
    x = suspx.syntax.gen_expr(seed, size, allow_meta=True)
    assert suspx.rewrite.similar(x, x)


@hypothesis.given(seeds, hypothesis.strategies.integers(1, 8), hypothesis.strategies.integers(0, 4))
def test_similar_environments_have_the_same_readings(seed: int, size: int, extra: int) -> None:
    """Check that suspensions over similar meta free environments have the same normal form."""
    left, right = suspx.test.gen_similar_pair(seed, size)
    assert suspx.rewrite.similar(left, right)
    t = suspx.syntax.gen_expr(seed + 1, size, allow_meta=False)
    ol = suspx.syntax.env_len(left)
    nl = max(suspx.syntax.env_lev(left), suspx.syntax.env_lev(right)) + extra
    assert suspx.rewrite.rm_normalize(Susp(t, ol, nl, left)) == suspx.rewrite.rm_normalize(Susp(t, ol, nl, right))


@hypothesis.given(seeds, hypothesis.strategies.integers(1, 8))
def test_similar_environments_stay_similar_when_evaluated(seed: int, size: int) -> None:
    """Check that evaluating merged environments keeps similar environments similar."""
    left, right = suspx.test.gen_similar_pair(seed, size, allow_meta=True)
    assert suspx.rewrite.similar(suspx.rewrite.env_to_simple(left), suspx.rewrite.env_to_simple(right))
