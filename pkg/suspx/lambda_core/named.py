# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Named lambda terms and capture-avoiding substitution."""

import dataclasses
import functools
import itertools
import typing

from suspx._backends.tree import Node
from suspx.lambda_core.simple_types import SimpleType


@dataclasses.dataclass(frozen=True)
class NConst(Node):
    """A constant."""

    name: str


@dataclasses.dataclass(frozen=True)
class NVar(Node):
    """A variable occurrence."""

    name: str


@dataclasses.dataclass(frozen=True)
class NApp(Node):
    """Application of fun to arg."""

    fun: "NamedTerm"
    arg: "NamedTerm"

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("fun", "arg")


@dataclasses.dataclass(frozen=True)
class NAbs(Node):
    """Abstraction of binder over body, optionally annotated with the binder type."""

    binder: str
    body: "NamedTerm"
    ann: typing.Optional[SimpleType] = None

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("body", )


NamedTerm = typing.Union[NConst, NVar, NApp, NAbs]


@functools.singledispatch
def free_vars(t: Node) -> typing.FrozenSet[str]:
    """
    Compute the free variables of a named term.

    Please the dispatched implementation for more details.
    """
    raise RuntimeError("Please run the dispatched implementation.")


@free_vars.register
def _(t: NConst) -> typing.FrozenSet[str]:
    return frozenset()


@free_vars.register
def _(t: NVar) -> typing.FrozenSet[str]:
    return frozenset([t.name])


@free_vars.register
def _(t: NApp) -> typing.FrozenSet[str]:
    return free_vars(t.fun) | free_vars(t.arg)


@free_vars.register
def _(t: NAbs) -> typing.FrozenSet[str]:
    return free_vars(t.body) - {t.binder}


def fresh_name(avoid: typing.AbstractSet[str]) -> str:
    """Return the first of x1, x2, ... not in avoid."""
    for counter in itertools.count(1):
        candidate = f"x{counter}"
        if candidate not in avoid:
            return candidate
    raise AssertionError("unreachable")  # pragma: no cover


def subst_named(t: NamedTerm, s: NamedTerm, x: str) -> NamedTerm:
    """
    Substitute s for the free occurrences of x in t, renaming binders to avoid capture.

    Parameters
    ----------
    t
        Term in which the substitution takes place.
    s
        Substituted term.
    x
        Substituted variable.

    Returns
    -------
    :
        The term t[s/x].
    """
    if isinstance(t, NConst):
        return t
    elif isinstance(t, NVar):
        return s if t.name == x else t
    elif isinstance(t, NApp):
        return NApp(subst_named(t.fun, s, x), subst_named(t.arg, s, x))
    else:
        assert isinstance(t, NAbs)
        if t.binder == x:
            return t
        if t.binder not in free_vars(s) or x not in free_vars(t.body):
            return NAbs(t.binder, subst_named(t.body, s, x), t.ann)
        fresh = fresh_name(free_vars(t.body) | free_vars(s) | {x})
        renamed = subst_named(t.body, NVar(fresh), t.binder)
        return NAbs(fresh, subst_named(renamed, s, x), t.ann)


def alpha_eq(t1: NamedTerm, t2: NamedTerm) -> bool:
    """Decide alpha-equivalence by comparing the nameless encodings under a shared free variable listing."""
    from suspx.lambda_core.conversion import to_debruijn

    free_order = sorted(free_vars(t1) | free_vars(t2))
    return to_debruijn(t1, free_order) == to_debruijn(t2, free_order)
