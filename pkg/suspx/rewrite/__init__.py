# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Rewriting in the suspension calculus."""

from suspx.rewrite.confluence import check_assoc, check_local_confluence, CounterexampleReport
from suspx.rewrite.head import head_normalize, hnf_decompose, is_hnf
from suspx.rewrite.normalize import env_to_simple, full_normalize, r_normalize, rm_derivation, rm_normalize
from suspx.rewrite.parallel import parallel_beta_step
from suspx.rewrite.redexes import applicable_rules, apply_rule, enumerate_redexes
from suspx.rewrite.rules import (
    ALL_RULES, MERGING, MetaMode, READING, READING_AND_MERGING, RuleId, RULES, rules_for)
from suspx.rewrite.similarity import similar
