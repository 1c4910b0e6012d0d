# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Maximal parallel beta_s-reduction."""

from suspx._backends.tree import map_children, Node
from suspx.lambda_core.debruijn import Abs, App
from suspx.syntax.expressions import Cons, EnvTerm, Nil, Susp


def parallel_beta_step(x: Node) -> Node:
    """
    Contract simultaneously every beta_s-redex of x.

    Redexes nested in other redexes are developed first, so that the result is the complete development
    of the redexes visible in x.
    """
    if isinstance(x, App) and isinstance(x.fun, Abs):
        return Susp(parallel_beta_step(x.fun.body), 1, 0, Cons(EnvTerm(parallel_beta_step(x.arg), 0), Nil()))
    return map_children(x, parallel_beta_step)
