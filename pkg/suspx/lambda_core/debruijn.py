# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Nameless lambda terms."""

import dataclasses
import typing

from suspx._backends.tree import Node
from suspx.errors import IndexUnderflow
from suspx.lambda_core.simple_types import SimpleType


@dataclasses.dataclass(frozen=True)
class Const(Node):
    """A constant."""

    name: str


@dataclasses.dataclass(frozen=True)
class Index(Node):
    """A de Bruijn index, counting from one."""

    i: int


@dataclasses.dataclass(frozen=True)
class App(Node):
    """Application of fun to arg."""

    fun: Node
    arg: Node

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("fun", "arg")


@dataclasses.dataclass(frozen=True)
class Abs(Node):
    """Abstraction, optionally annotated with the type of its binder."""

    body: Node
    ann: typing.Optional[SimpleType] = None

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("body", )


DbTerm = typing.Union[Const, Index, App, Abs]


def apps(head: Node, *args: Node) -> Node:
    """Build the left-nested application head args[0] ... args[-1]."""
    result = head
    for arg in args:
        result = App(result, arg)
    return result


def lams(n: int, body: Node) -> Node:
    """Wrap body in n unannotated abstractions."""
    for _ in range(n):
        body = Abs(body)
    return body


def db_shift(t: DbTerm, delta: int, cutoff: int = 0) -> DbTerm:
    """
    Renumber the indices of t pointing past cutoff enclosing binders.

    Parameters
    ----------
    t
        Term to be renumbered.
    delta
        Amount added to every renumbered index.
    cutoff
        Number of binders, at entry, whose indices are left untouched.

    Returns
    -------
    :
        The renumbered term.
    """
    if delta == 0:
        return t
    if isinstance(t, Const):
        return t
    elif isinstance(t, Index):
        if t.i <= cutoff:
            return t
        if t.i + delta < 1:
            raise IndexUnderflow(f"Renumbering #{t.i} by {delta} leaves the positive integers")
        return Index(t.i + delta)
    elif isinstance(t, App):
        return App(db_shift(t.fun, delta, cutoff), db_shift(t.arg, delta, cutoff))
    elif isinstance(t, Abs):
        return Abs(db_shift(t.body, delta, cutoff + 1), t.ann)
    else:
        raise TypeError(f"Not a de Bruijn term: {t!r}")


def is_db_term(t: Node) -> bool:
    """Tell whether t only contains constants, indices, applications and abstractions."""
    if isinstance(t, (Const, Index)):
        return True
    elif isinstance(t, App):
        return is_db_term(t.fun) and is_db_term(t.arg)
    elif isinstance(t, Abs):
        return is_db_term(t.body)
    else:
        return False
