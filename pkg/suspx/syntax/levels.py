# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Checked arithmetic on embedding levels and indices."""

from suspx.errors import LevelsOverflow

LEVEL_BOUND = 2**63


def monus(a: int, b: int) -> int:
    """Truncated subtraction: a - b when nonnegative, zero otherwise."""
    return a - b if a > b else 0


def check_level(value: int) -> int:
    """Return value, after checking that it is representable as a non-negative 64-bit integer."""
    if not 0 <= value < LEVEL_BOUND:
        raise LevelsOverflow(f"Level {value} is outside of the 64-bit range")
    return value
