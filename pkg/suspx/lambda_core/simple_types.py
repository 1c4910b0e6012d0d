# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Simple types, used both as binder annotations and by the type checkers."""

import dataclasses
import typing


@dataclasses.dataclass(frozen=True)
class Base(object):
    """A base type."""

    name: str


@dataclasses.dataclass(frozen=True)
class Arrow(object):
    """Function type from dom to cod."""

    dom: "SimpleType"
    cod: "SimpleType"


SimpleType = typing.Union[Base, Arrow]


def arrows(*types: SimpleType) -> SimpleType:
    """Build the right-nested arrow A1 -> A2 -> ... -> An."""
    assert len(types) > 0
    result = types[-1]
    for type_ in reversed(types[:-1]):
        result = Arrow(type_, result)
    return result
