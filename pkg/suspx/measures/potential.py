# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Internal embedding potential of suspension expressions."""

import functools

from suspx._backends.tree import Node
from suspx.lambda_core.debruijn import Abs, App, Const, Index
from suspx.syntax.expressions import Cons, EnvTerm, Merged, MetaVar, Nil, Susp


@functools.singledispatch
def mu(x: Node) -> int:
    """
    Count the nesting of suspensions and merged environments which an expression may push inwards.

    Please see the dispatched implementations for more details.
    """
    raise RuntimeError("Please run the dispatched implementation.")


@mu.register(Const)
@mu.register(MetaVar)
@mu.register(Index)
@mu.register(Nil)
def _(x: Node) -> int:
    return 0


@mu.register
def _(x: Abs) -> int:
    return mu(x.body)


@mu.register
def _(x: App) -> int:
    return max(mu(x.fun), mu(x.arg))


@mu.register
def _(x: Susp) -> int:
    return mu(x.term) + mu(x.env) + 1


@mu.register
def _(x: EnvTerm) -> int:
    return mu(x.term)


@mu.register
def _(x: Cons) -> int:
    return max(mu(x.head), mu(x.tail))


@mu.register
def _(x: Merged) -> int:
    return mu(x.e1) + mu(x.e2) + 1
