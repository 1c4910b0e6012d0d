# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Other explicit substitution calculi and their translations from and to the suspension calculus."""

from suspx.calculi.lambda_s import (
    certify_simulation, ls_normalize, ls_position_to_susp, ls_step, ls_to_susp, LsRuleset, Phi, Sigma)
from suspx.calculi.mellies import GrowthReport, mellies_replay, mellies_unfold
from suspx.calculi.sigma import (
    Comp, Dot, Id, index, One, SigClosure, sigma_normalize, sigma_step, SigmaRuleset, SigShift, shifts)
from suspx.calculi.sigma_translation import env_to_sigma, sigma_sub_to_env, sigma_to_susp, susp_to_sigma
from suspx.calculi.upsilon import (
    Lift, Slash, ups_normalize, ups_step, ups_sub_to_env, ups_to_susp, UpsClosure, UpsRuleset, UpsShift)
