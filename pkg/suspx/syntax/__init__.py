# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Suspension expressions, their measures and their wellformedness."""

from suspx.syntax.environments import entries, is_simple, truncate
from suspx.syntax.expressions import (
    Cons, contains_meta, contains_susp, env_list, EnvTerm, is_env, is_term, Merged, MetaVar, Nil, Susp, SuspEnv,
    SuspExpr, SuspTerm)
from suspx.syntax.generate import ExpressionGenerator, gen_env, gen_expr
from suspx.syntax.levels import check_level, monus
from suspx.syntax.measures import env_ind, env_lev, env_len
from suspx.syntax.wellformed import check_wellformed, WellformednessViolation
