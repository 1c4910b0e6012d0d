# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Named and de Bruijn lambda terms, substitution and beta-reduction."""

from suspx.lambda_core.conversion import from_debruijn, to_debruijn
from suspx.lambda_core.debruijn import Abs, App, apps, Const, db_shift, DbTerm, Index, is_db_term, lams
from suspx.lambda_core.named import alpha_eq, free_vars, NAbs, NApp, NamedTerm, NConst, NVar, subst_named
from suspx.lambda_core.reduction import beta_derivation, beta_normalize, beta_redexes, beta_step, db_beta_contract
from suspx.lambda_core.simple_types import Arrow, arrows, Base, SimpleType
