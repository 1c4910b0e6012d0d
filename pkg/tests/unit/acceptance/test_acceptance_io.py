# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Desk-scale acceptance runs of the printers, the parsers and trace replay."""

import suspx.errors
import suspx.io
import suspx.rewrite
import suspx.syntax
import suspx.test
from suspx.io import Language


def test_round_trips() -> None:
    """Print and parse back generated expressions of every grammar."""
    generators = [
        (suspx.test.gen_named, Language.NAMED),
        (suspx.test.gen_db, Language.DE_BRUIJN),
        (lambda seed, size: suspx.syntax.gen_expr(seed, size, allow_meta=True), Language.SUSPENSION),
        (lambda seed, size: suspx.syntax.gen_env(seed, size, allow_meta=True), Language.SUSPENSION),
        (suspx.test.gen_upsilon, Language.UPSILON),
        (suspx.test.gen_lambda_s, Language.LAMBDA_S),
        (suspx.test.gen_sigma, Language.SIGMA)
    ]
    for (generator, language) in generators:
        for seed in range(1000):
            x = generator(seed, 1 + seed % 30)
            assert suspx.io.import_expression(suspx.io.export_expression(x, language), language) == x, seed


def test_trace_replay() -> None:
    """Replay exported full normalization traces."""
    replayed = 0
    seed = 0
    while replayed < 100:
        x = suspx.syntax.gen_expr(seed, 1 + seed % 20, allow_meta=True)
        seed += 1
        try:
            normal_form, trace = suspx.rewrite.full_normalize(x, 200)
        except suspx.errors.BudgetExhausted:
            continue
        records = suspx.io.import_trace(suspx.io.export_trace(trace))
        assert suspx.io.replay_trace(x, records) == normal_form
        replayed += 1
