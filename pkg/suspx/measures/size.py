# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""The family of sizes eta_i, weighting abstractions by the suspensions they are embedded in."""

from suspx._backends.tree import Node
from suspx.lambda_core.debruijn import Abs, App, Const, Index
from suspx.measures.potential import mu
from suspx.syntax.expressions import Cons, EnvTerm, Merged, MetaVar, Nil, Susp


def eta(i: int, x: Node) -> int:
    """
    Compute the size eta_i of a suspension expression.

    Parameters
    ----------
    i
        Number of suspensions or merged environments the expression is embedded in.
    x
        Suspension expression.

    Returns
    -------
    :
        The size of x, in which an abstraction weighs i + 1.
    """
    if isinstance(x, (Const, MetaVar, Index)):
        return 1
    elif isinstance(x, Abs):
        return eta(i, x.body) + i + 1
    elif isinstance(x, App):
        return max(eta(i, x.fun), eta(i, x.arg)) + 1
    elif isinstance(x, Susp):
        return eta(i + 1, x.term) + eta(i + 1 + mu(x.term), x.env) + 1
    elif isinstance(x, Nil):
        return 0
    elif isinstance(x, EnvTerm):
        return eta(i, x.term)
    elif isinstance(x, Cons):
        return max(eta(i, x.head), eta(i, x.tail))
    elif isinstance(x, Merged):
        return eta(i + 1, x.e1) + eta(i + 1 + mu(x.e1), x.e2) + 1
    else:
        raise TypeError(f"Not a suspension expression: {x!r}")
