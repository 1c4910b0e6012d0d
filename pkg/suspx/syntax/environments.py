# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Simple environments and their truncation."""

import typing

from suspx._backends.tree import Node
from suspx.errors import NotSimple
from suspx.syntax.expressions import Cons, EnvTerm, Merged, Nil


def is_simple(e: Node) -> bool:
    """Tell whether e is a nil-terminated spine of conses."""
    while isinstance(e, Cons):
        e = e.tail
    return isinstance(e, Nil)


def entries(e: Node) -> typing.List[EnvTerm]:
    """Return the environment terms of a simple environment."""
    result = []
    while isinstance(e, Cons):
        result.append(e.head)
        e = e.tail
    if isinstance(e, Merged):
        raise NotSimple("A merged environment occurs on the spine")
    return result


def truncate(e: Node, i: int) -> Node:
    """Drop the first i entries of a simple environment; nil when fewer entries exist."""
    if not is_simple(e):
        raise NotSimple("Only simple environments can be truncated")
    while i > 0 and isinstance(e, Cons):
        e = e.tail
        i -= 1
    return e
