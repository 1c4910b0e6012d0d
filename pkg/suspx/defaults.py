# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Default budgets and fuels, overridable through environment variables."""

import os
import typing

# Maximum number of beta_s steps of a full or head normalization
MAX_STEPS = 10000

# Safety fuel of reading and merging normalization, which always terminates
RM_FUEL = 10**7

# Safety fuel of the substitution fragment of the lambda-sigma calculus
SIGMA_FUEL = 10**6

# Depth of the breadth-first search certifying lambda-s simulation steps
SEARCH_DEPTH = 32

_ENVIRONMENT_VARIABLES = {
    "max_steps": ("SUSPX_MAX_STEPS", MAX_STEPS),
    "rm_fuel": ("SUSPX_RM_FUEL", RM_FUEL),
    "sigma_fuel": ("SUSPX_SIGMA_FUEL", SIGMA_FUEL),
    "search_depth": ("SUSPX_SEARCH_DEPTH", SEARCH_DEPTH)
}


def determine_default_options() -> typing.Dict[str, int]:
    """Determine default options, giving priority to environment variables over built-in values."""
    default_options: typing.Dict[str, int] = dict()
    for (option, (variable, builtin)) in _ENVIRONMENT_VARIABLES.items():
        try:
            value = os.environ[variable]
        except KeyError:
            default_options[option] = builtin
        else:
            try:
                default_options[option] = int(value)
            except ValueError:
                raise ValueError(f"Environment variable {variable} must be an integer, got {value!r}")
            if default_options[option] <= 0:
                raise ValueError(f"Environment variable {variable} must be positive, got {value!r}")
    return default_options
