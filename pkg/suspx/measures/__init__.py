# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Termination measures of the reading and merging rules."""

from suspx.measures.essence import AppF, ConsF, essence, FOTerm, Lam, S, Star
from suspx.measures.ordering import expr_gg, lrpo_gt
from suspx.measures.potential import mu
from suspx.measures.size import eta
