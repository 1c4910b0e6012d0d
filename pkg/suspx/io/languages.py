# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Names of the expression families having a concrete syntax."""

import enum


class Language(enum.Enum):
    """An expression family, valued by the name the command line interface uses for it."""

    NAMED = "named"
    DE_BRUIJN = "db"
    SUSPENSION = "susp"
    UPSILON = "upsilon"
    LAMBDA_S = "s"
    SIGMA = "sigma"
