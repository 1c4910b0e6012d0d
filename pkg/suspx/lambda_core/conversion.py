# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Conversion between named and nameless lambda terms."""

import typing

from suspx.errors import DanglingIndex, DuplicateFreeVariable, UnknownFreeVariable
from suspx.lambda_core.debruijn import Abs, App, Const, DbTerm, Index
from suspx.lambda_core.named import NAbs, NApp, NamedTerm, NConst, NVar


def to_debruijn(t: NamedTerm, free_order: typing.Sequence[str]) -> DbTerm:
    """
    Compute the nameless encoding of a named term.

    Parameters
    ----------
    t
        Named term to be encoded.
    free_order
        Listing of the free variables: the k-th entry under d binders is encoded as index d + k.

    Returns
    -------
    :
        The de Bruijn term.
    """
    if len(set(free_order)) != len(free_order):
        raise DuplicateFreeVariable(f"Free variable listing {list(free_order)} has duplicates")
    return _to_debruijn(t, [], free_order)


def _to_debruijn(t: NamedTerm, binders: typing.List[str], free_order: typing.Sequence[str]) -> DbTerm:
    if isinstance(t, NConst):
        return Const(t.name)
    elif isinstance(t, NVar):
        # Innermost binder is the last one in the list
        for depth, binder in enumerate(reversed(binders)):
            if binder == t.name:
                return Index(depth + 1)
        try:
            return Index(len(binders) + free_order.index(t.name) + 1)
        except ValueError:
            raise UnknownFreeVariable(f"Free variable {t.name} is not listed")
    elif isinstance(t, NApp):
        return App(_to_debruijn(t.fun, binders, free_order), _to_debruijn(t.arg, binders, free_order))
    else:
        assert isinstance(t, NAbs)
        binders.append(t.binder)
        try:
            return Abs(_to_debruijn(t.body, binders, free_order), t.ann)
        finally:
            binders.pop()


def from_debruijn(t: DbTerm, free_order: typing.Sequence[str]) -> NamedTerm:
    """Name a de Bruijn term, calling the binder at depth d by xd and free indices by their listing entry."""
    used = set(free_order)
    return _from_debruijn(t, 0, free_order, used)


def _binder_name(depth: int, used: typing.AbstractSet[str]) -> str:
    name = f"x{depth}"
    while name in used:
        # Never shadow a listed free variable
        name += "'"
    return name


def _from_debruijn(
    t: DbTerm, depth: int, free_order: typing.Sequence[str], used: typing.AbstractSet[str]
) -> NamedTerm:
    if isinstance(t, Const):
        return NConst(t.name)
    elif isinstance(t, Index):
        if t.i <= depth:
            return NVar(_binder_name(depth - t.i + 1, used))
        elif t.i - depth <= len(free_order):
            return NVar(free_order[t.i - depth - 1])
        else:
            raise DanglingIndex(f"Index #{t.i} under {depth} binders exceeds the free variable listing")
    elif isinstance(t, App):
        return NApp(_from_debruijn(t.fun, depth, free_order, used), _from_debruijn(t.arg, depth, free_order, used))
    elif isinstance(t, Abs):
        return NAbs(
            _binder_name(depth + 1, used), _from_debruijn(t.body, depth + 1, free_order, used), t.ann)
    else:
        raise TypeError(f"Not a de Bruijn term: {t!r}")
