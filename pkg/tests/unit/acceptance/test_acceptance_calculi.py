# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Desk-scale acceptance runs of the translations between calculi."""

import typing

import suspx._backends.rewriting
import suspx.calculi
import suspx.calculi.lambda_s
import suspx.calculi.sigma
import suspx.calculi.upsilon
import suspx.io
import suspx.rewrite
import suspx.syntax
import suspx.test
from suspx._backends.tree import Node
from suspx.calculi import One
from suspx.lambda_core import Abs, App, Index
from suspx.syntax import env_list, MetaVar, Susp


def test_sigma_translation_round_trip() -> None:
    """Check that translating to lambda-sigma and back gives the term itself."""
    for seed in range(500):
        t = suspx.syntax.gen_expr(seed, 1 + seed % 30, allow_meta=False, allow_const=False)
        assert suspx.calculi.sigma_to_susp(suspx.calculi.susp_to_sigma(t)) == t, seed


def test_lambda_s_simulation() -> None:
    """Check that s steps are simulated by reading derivations."""
    certified = 0
    rules = list(suspx.calculi.lambda_s.S_RULES.values())
    seed = 0
    while certified < 300:
        x = suspx.test.gen_lambda_s(seed, 1 + seed % 15)
        for (position, rule) in suspx._backends.rewriting.enumerate_redexes(x, rules):
            assert suspx.calculi.certify_simulation(x, position, rule.rule_id) is not None, (seed, rule.rule_id)
            certified += 1
        seed += 1


def test_upsilon_joinability() -> None:
    """Check that the two sides of upsilon steps translate to joinable terms."""
    joined = 0
    rules = list(suspx.calculi.upsilon.UPSILON_RULES.values())
    seed = 0
    while joined < 300:
        a = suspx.test.gen_upsilon(seed, 1 + seed % 15)
        expected = suspx.rewrite.rm_normalize(suspx.calculi.ups_to_susp(a))
        for (position, rule) in suspx._backends.rewriting.enumerate_redexes(a, rules):
            b = suspx.calculi.ups_step(a, position, rule.rule_id)
            assert suspx.rewrite.rm_normalize(suspx.calculi.ups_to_susp(b)) == expected, (seed, rule.rule_id)
            joined += 1
        seed += 1


def test_sigma_steps_preserve_normal_forms() -> None:
    """Check that the two sides of substitution steps translate to terms with the same normal form."""
    checked = 0
    rules = list(suspx.calculi.sigma.SIGMA_RULES.values())
    seed = 0
    while checked < 300:
        x = suspx.test.gen_sigma(seed, 1 + seed % 15)
        expected = suspx.rewrite.rm_normalize(suspx.calculi.sigma_to_susp(x))
        for (position, rule) in suspx._backends.rewriting.enumerate_redexes(x, rules):
            y = suspx.calculi.sigma_step(x, position, rule.rule_id)
            assert suspx.rewrite.rm_normalize(suspx.calculi.sigma_to_susp(y)) == expected, (seed, rule.rule_id)
            checked += 1
        seed += 1


def test_reading_and_merging_steps_preserve_sigma_normal_forms() -> None:
    """Check that the two sides of reading and merging steps translate to terms with the same sigma normal form."""
    checked = 0
    seed = 0
    while checked < 300:
        x = suspx.syntax.gen_expr(seed, 1 + seed % 20, allow_meta=False, allow_const=False)
        expected, _ = suspx.calculi.sigma_normalize(suspx.calculi.susp_to_sigma(x), record=False)
        for (position, rule) in suspx.rewrite.enumerate_redexes(x, suspx.rewrite.READING_AND_MERGING):
            y = suspx.rewrite.apply_rule(x, rule, position)
            actual, _ = suspx.calculi.sigma_normalize(suspx.calculi.susp_to_sigma(y), record=False)
            assert actual == expected, (seed, rule)
            checked += 1
        seed += 1


def test_translations_are_injective() -> None:
    """Check that distinct lambda-upsilon and suspension terms have distinct translations."""
    upsilon_images: typing.Dict[Node, Node] = {}
    for seed in range(10000):
        a = suspx.test.gen_upsilon(seed, 1 + seed % 12)
        image = suspx.calculi.ups_to_susp(a)
        assert upsilon_images.setdefault(image, a) == a, seed
    sigma_images: typing.Dict[Node, Node] = {}
    for seed in range(10000):
        t = suspx.syntax.gen_expr(seed, 1 + seed % 12, allow_meta=False, allow_const=False)
        image = suspx.calculi.susp_to_sigma(t)
        assert sigma_images.setdefault(image, t) == t, seed


def test_mellies_contrast() -> None:
    """Unfold the growing lambda-sigma cycle, and replay its start in the suspension calculus."""
    timings = [0.0, 0.0]
    with suspx.io.Timer(suspx.io.store_elapsed_time(timings, 0)):
        trace, report = suspx.calculi.mellies_unfold(App(One(), One()), Abs(One()), 3)
    assert report.strictly_increasing
    assert len(report.positions) == 3
    assert len(trace) > 0
    e = env_list((Index(3), 1))
    with suspx.io.Timer(suspx.io.store_elapsed_time(timings, 1)):
        normal_form, _ = suspx.calculi.mellies_replay(MetaVar("a"), MetaVar("b"), 1, 1, e)
    assert normal_form == Susp(MetaVar("a"), 2, 1, env_list((Susp(MetaVar("b"), 1, 1, e), 1), tail=e))
    assert suspx.rewrite.rm_normalize(normal_form) == normal_form
    assert sum(timings) < 5.0
