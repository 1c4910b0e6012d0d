# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""SuspX test module."""

from suspx.test.generators import (
    gen_beta_s_step_pair, gen_beta_step_pair, gen_db, gen_db_with_redex, gen_lambda_s, gen_named, gen_sigma,
    gen_similar_pair, gen_type, gen_typed, gen_upsilon, TypedTermGenerator)
from suspx.test.paths import beta_path_search
from suspx.test.strategies import random_derivation, random_rm_normalize
