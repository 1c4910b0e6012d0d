# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Tests for suspx.lambda_core.conversion module."""

import hypothesis
import hypothesis.strategies
import pytest

import suspx.errors
import suspx.lambda_core
import suspx.test
from suspx.lambda_core import Abs, App, Index, NAbs, NApp, NVar


def test_to_debruijn_closed() -> None:
    """Encode (\\x. (\\y. y) (\\z. x))."""
    t = NAbs("x", NApp(NAbs("y", NVar("y")), NAbs("z", NVar("x"))))
    assert suspx.lambda_core.to_debruijn(t, []) == Abs(App(Abs(Index(1)), Abs(Index(2))))


def test_to_debruijn_free_variable() -> None:
    """Encode (\\x. y x) with y listed first."""
    t = NAbs("x", NApp(NVar("y"), NVar("x")))
    assert suspx.lambda_core.to_debruijn(t, ["y"]) == Abs(App(Index(2), Index(1)))


def test_to_debruijn_nested() -> None:
    """Encode (\\x. (\\y. (\\z. x) x) x)."""
    t = NAbs("x", NApp(NAbs("y", NApp(NAbs("z", NVar("x")), NVar("x"))), NVar("x")))
    assert suspx.lambda_core.to_debruijn(t, []) == Abs(App(Abs(App(Abs(Index(3)), Index(2))), Index(1)))


def test_to_debruijn_unknown_free_variable() -> None:
    """Check that unlisted free variables are rejected."""
    with pytest.raises(suspx.errors.UnknownFreeVariable):
        suspx.lambda_core.to_debruijn(NVar("x"), ["y"])


def test_to_debruijn_duplicate_free_variable() -> None:
    """Check that free variable listings naming a variable twice are rejected."""
    with pytest.raises(suspx.errors.DuplicateFreeVariable):
        suspx.lambda_core.to_debruijn(NVar("x"), ["x", "y", "x"])


def test_from_debruijn() -> None:
    """Name small de Bruijn terms."""
    assert suspx.lambda_core.from_debruijn(Abs(Index(1)), []) == NAbs("x1", NVar("x1"))
    assert suspx.lambda_core.from_debruijn(Abs(App(Index(2), Index(1))), ["y"]) == NAbs(
        "x1", NApp(NVar("y"), NVar("x1")))


def test_from_debruijn_dangling_index() -> None:
    """Check that indices past the free variable listing are rejected."""
    with pytest.raises(suspx.errors.DanglingIndex):
        suspx.lambda_core.from_debruijn(Index(1), [])


@hypothesis.given(hypothesis.strategies.integers(0, 2**31 - 1), hypothesis.strategies.integers(1, 20))
def test_round_trip(seed: int, size: int) -> None:
    """Check that naming and then encoding a de Bruijn term gives it back."""
    t = suspx.test.gen_db(seed, size)
    free_order = ["w", "x1", "y", "z"]
    assert suspx.lambda_core.to_debruijn(suspx.lambda_core.from_debruijn(t, free_order), free_order) == t


@hypothesis.given(hypothesis.strategies.integers(0, 2**31 - 1), hypothesis.strategies.integers(1, 20))
def test_round_trip_named(seed: int, size: int) -> None:
    """Check that encoding and then naming a named term gives an alpha-equivalent term."""
    t = suspx.test.gen_named(seed, size)
    free_order = sorted(suspx.lambda_core.free_vars(t))
    named = suspx.lambda_core.from_debruijn(suspx.lambda_core.to_debruijn(t, free_order), free_order)
    assert suspx.lambda_core.alpha_eq(named, t)
