# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Typing contexts and signatures."""

import dataclasses
import typing

from suspx.errors import ContextUnderflow, UnboundIndex, UnknownConstant
from suspx.lambda_core.simple_types import SimpleType


@dataclasses.dataclass(frozen=True)
class Context(object):
    """
    A stack of types, the innermost binder first.

    Attributes
    ----------
    stack
        Types of the indices 1, 2, ...
    """

    stack: typing.Tuple[SimpleType, ...] = ()

    def __len__(self) -> int:
        """Return the depth of the context."""
        return len(self.stack)

    def push(self, type_: SimpleType) -> "Context":
        """Return the context A.self for A = type_."""
        return Context((type_, ) + self.stack)

    def peel(self) -> "Context":
        """Return the context deprived of its innermost entry."""
        if len(self.stack) == 0:
            raise ContextUnderflow("Cannot peel an empty context")
        return Context(self.stack[1:])

    def lookup(self, i: int) -> SimpleType:
        """Return the type of index i."""
        if not 1 <= i <= len(self.stack):
            raise UnboundIndex(f"Index #{i} is unbound in a context of depth {len(self.stack)}")
        return self.stack[i - 1]


@dataclasses.dataclass(frozen=True)
class Signature(object):
    """
    Type assignments for constants.

    Attributes
    ----------
    declarations
        Map from constant names to their types.
    """

    declarations: typing.Mapping[str, SimpleType] = dataclasses.field(default_factory=dict)

    def lookup(self, name: str) -> SimpleType:
        """Return the type of a constant."""
        try:
            return self.declarations[name]
        except KeyError:
            raise UnknownConstant(f"Constant {name} is not declared")

    def extend(self, name: str, type_: SimpleType) -> "Signature":
        """Return a signature also declaring name."""
        assert name not in self.declarations, f"Constant {name} is already declared"
        return Signature({**self.declarations, name: type_})
