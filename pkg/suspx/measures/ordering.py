# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Lexicographic recursive path ordering on essences, and the induced order on suspension expressions."""

import typing

import plum

from suspx._backends.tree import Node
from suspx.measures.essence import essence, FOTerm, S

# Precedence on root symbols: s_i above s_j when i > j, and every s_i above all other symbols.
precedence_dispatcher = plum.Dispatcher()


@precedence_dispatcher
def _precedes(f: FOTerm, g: FOTerm) -> bool:
    return False


@precedence_dispatcher  # type: ignore[no-redef]
def _precedes(f: S, g: FOTerm) -> bool:  # noqa: F811
    return True


@precedence_dispatcher  # type: ignore[no-redef]
def _precedes(f: S, g: S) -> bool:  # noqa: F811
    return f.i > g.i


def _same_symbol(a: FOTerm, b: FOTerm) -> bool:
    if type(a) is not type(b):
        return False
    return not isinstance(a, S) or a.i == b.i  # type: ignore[attr-defined]


class _PathOrdering(object):
    """A single comparison, memoizing the outcome on pairs of subterms."""

    def __init__(self) -> None:
        self._memo: typing.Dict[typing.Tuple[int, int], bool] = dict()
        # Keep compared terms alive, so that their identities are not reused
        self._alive: typing.List[FOTerm] = list()

    def greater(self, a: FOTerm, b: FOTerm) -> bool:
        key = (id(a), id(b))
        if key not in self._memo:
            self._alive.extend((a, b))
            self._memo[key] = self._compare(a, b)
        return self._memo[key]

    def _compare(self, a: FOTerm, b: FOTerm) -> bool:
        a_args = a.arguments()
        b_args = b.arguments()
        if any(a_i == b or self.greater(a_i, b) for a_i in a_args):
            return True
        if _same_symbol(a, b):
            return self._greater_lex(a_args, b_args) and all(self.greater(a, b_j) for b_j in b_args)
        elif _precedes(a, b):
            return all(self.greater(a, b_j) for b_j in b_args)
        else:
            return False

    def _greater_lex(self, a_args: typing.Sequence[FOTerm], b_args: typing.Sequence[FOTerm]) -> bool:
        for (a_i, b_i) in zip(a_args, b_args):
            if a_i != b_i:
                return self.greater(a_i, b_i)
        return False


def lrpo_gt(a: FOTerm, b: FOTerm) -> bool:
    """Decide whether a is above b in the lexicographic recursive path ordering."""
    return _PathOrdering().greater(a, b)


def expr_gg(x: Node, y: Node) -> bool:
    """Decide whether the essence of x is above the essence of y."""
    return lrpo_gt(essence(x), essence(y))
