# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""The similarity relation, identifying environments which split their renumbering differently."""

import plum

from suspx._backends.tree import Node
from suspx.lambda_core.debruijn import Abs, App
from suspx.syntax.expressions import Cons, EnvTerm, Merged, Susp

# Similarity is decided by structural recursion on pairs of nodes, dispatched on the types of both nodes.
similar_dispatcher = plum.Dispatcher()


@similar_dispatcher
def _similar(x: Node, y: Node) -> bool:
    """Leaves are only similar to themselves; nodes of different kinds are never similar."""
    return x == y


@similar_dispatcher  # type: ignore[no-redef]
def _similar(x: App, y: App) -> bool:  # noqa: F811
    return _similar(x.fun, y.fun) and _similar(x.arg, y.arg)


@similar_dispatcher  # type: ignore[no-redef]
def _similar(x: Abs, y: Abs) -> bool:  # noqa: F811
    return x.ann == y.ann and _similar(x.body, y.body)


@similar_dispatcher  # type: ignore[no-redef]
def _similar(x: Susp, y: Susp) -> bool:  # noqa: F811
    return x.ol == y.ol and x.nl == y.nl and _similar(x.term, y.term) and _similar(x.env, y.env)


@similar_dispatcher  # type: ignore[no-redef]
def _similar(x: EnvTerm, y: EnvTerm) -> bool:  # noqa: F811
    return x.level == y.level and _similar(x.term, y.term)


@similar_dispatcher  # type: ignore[no-redef]
def _similar(x: Merged, y: Merged) -> bool:  # noqa: F811
    return x.nl1 == y.nl1 and x.ol2 == y.ol2 and _similar(x.e1, y.e1) and _similar(x.e2, y.e2)


@similar_dispatcher  # type: ignore[no-redef]
def _similar(x: Cons, y: Cons) -> bool:  # noqa: F811
    """Conses are similar by congruence, or by moving the renumbering of suspended heads between levels."""
    if not _similar(x.tail, y.tail):
        return False
    if _similar(x.head, y.head):
        return True
    return _similar_suspended_heads(x.head, y.head)


def _similar_suspended_heads(x: EnvTerm, y: EnvTerm) -> bool:
    """Decide (susp(t, ol, nl, r), nl + k) ~ (susp(t', ol, nl', r'), nl' + k) for some non-negative k."""
    if not (isinstance(x.term, Susp) and isinstance(y.term, Susp)):
        return False
    if x.term.ol != y.term.ol:
        return False
    k = x.level - x.term.nl
    if k < 0 or y.level - y.term.nl != k:
        return False
    return _similar(x.term.term, y.term.term) and _similar(x.term.env, y.term.env)


def similar(x: Node, y: Node) -> bool:
    """
    Decide whether two suspension expressions are similar.

    Parameters
    ----------
    x
        First suspension expression.
    y
        Second suspension expression.

    Returns
    -------
    :
        True if and only if a derivation of x ~ y exists.
    """
    return _similar(x, y)  # type: ignore[no-any-return]
