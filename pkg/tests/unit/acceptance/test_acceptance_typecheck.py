# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Desk-scale acceptance runs of the type checker."""

import suspx.rewrite
import suspx.test
import suspx.typecheck
from suspx.typecheck import Context


def test_subject_reduction_and_normalization() -> None:
    """Check that typed suspension terms keep their type across every step, and that they normalize."""
    for seed in range(200):
        t, type_, sig = suspx.test.gen_typed(seed, 1 + seed % 3, seed % 16)
        assert suspx.typecheck.typecheck_susp(Context(), sig, t) == type_, seed
        for (position, rule) in suspx.rewrite.enumerate_redexes(t):
            successor = suspx.rewrite.apply_rule(t, rule, position)
            assert suspx.typecheck.typecheck_susp(Context(), sig, successor) == type_, (seed, rule)
        normal_form, _ = suspx.rewrite.full_normalize(t, 5000, record=False)
        assert suspx.typecheck.typecheck_susp(Context(), sig, normal_form) == type_, seed
