# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Random generation of wellformed suspension expressions."""

import typing

import numpy as np

from suspx._backends.tree import Node
from suspx.lambda_core.debruijn import Abs, App, Const, Index
from suspx.syntax.expressions import Cons, EnvTerm, Merged, MetaVar, Nil, Susp
from suspx.syntax.measures import env_len, env_lev

CONSTANTS = ("a", "b", "c", "d")
META_VARIABLES = ("t", "s", "u")


class ExpressionGenerator(object):
    """
    Generator of wellformed suspension expressions within a node budget.

    Embedding levels are chosen after the environments they constrain, so that every output is
    wellformed by construction.

    Parameters
    ----------
    rng
        numpy random generator driving every choice.
    allow_meta
        Whether meta variables may occur.
    allow_const
        Whether constants may occur.
    max_index
        Largest index occurring as a leaf.
    slack
        Largest amount by which a chosen level exceeds the level of the environment it bounds.

    Attributes
    ----------
    _rng
        Generator provided as input.
    _leaves
        Kinds of leaves which can be generated.
    _max_index
        Largest index provided as input.
    _slack
        Level slack provided as input.
    """

    def __init__(
        self, rng: np.random.Generator, allow_meta: bool, allow_const: bool = True, max_index: int = 4,
        slack: int = 2
    ) -> None:
        self._rng = rng
        self._leaves = ["index"] + (["const"] if allow_const else []) + (["meta"] if allow_meta else [])
        self._max_index = max_index
        self._slack = slack

    def _pick(self, options: typing.Sequence[str]) -> str:
        return options[int(self._rng.integers(len(options)))]

    def _level_above(self, level: int) -> int:
        return level + int(self._rng.integers(self._slack + 1))

    def leaf(self) -> Node:
        """Generate a constant, an index or a meta variable."""
        kind = self._pick(self._leaves)
        if kind == "index":
            return Index(int(self._rng.integers(1, self._max_index + 1)))
        elif kind == "const":
            return Const(self._pick(CONSTANTS))
        else:
            return MetaVar(self._pick(META_VARIABLES))

    def term(self, size: int) -> Node:
        """Generate a term with at most size nodes."""
        assert size >= 1
        if size == 1 or self._rng.random() < 0.1:
            return self.leaf()
        kinds = ["abs"] + (["app", "susp", "susp"] if size >= 3 else [])
        kind = self._pick(kinds)
        if kind == "abs":
            return Abs(self.term(size - 1))
        elif kind == "app":
            left = int(self._rng.integers(1, size - 1))
            return App(self.term(left), self.term(size - 1 - left))
        else:
            left = int(self._rng.integers(1, size - 1))
            env = self.env(size - 1 - left)
            return Susp(self.term(left), env_len(env), self._level_above(env_lev(env)), env)

    def env(self, size: int) -> Node:
        """Generate an environment with at most size nodes."""
        assert size >= 1
        if size < 3 or self._rng.random() < 0.1:
            return Nil()
        kinds = ["merged"] + (["cons", "cons"] if size >= 4 else [])
        kind = self._pick(kinds)
        if kind == "cons":
            head_size = int(self._rng.integers(1, size - 2))
            tail = self.env(size - 2 - head_size)
            return Cons(EnvTerm(self.term(head_size), self._level_above(env_lev(tail))), tail)
        else:
            left = int(self._rng.integers(1, size - 1))
            e1 = self.env(left)
            e2 = self.env(size - 1 - left)
            return Merged(e1, self._level_above(env_lev(e1)), env_len(e2), e2)


def gen_expr(seed: int, size: int, allow_meta: bool, allow_const: bool = True) -> Node:
    """
    Generate a wellformed suspension term.

    Parameters
    ----------
    seed
        Seed of the random generator; equal seeds give equal terms.
    size
        Maximum number of nodes.
    allow_meta
        Whether meta variables may occur.
    allow_const
        Whether constants may occur.

    Returns
    -------
    :
        A wellformed term with at most size nodes.
    """
    return ExpressionGenerator(np.random.default_rng(seed), allow_meta, allow_const).term(size)


def gen_env(seed: int, size: int, allow_meta: bool, allow_const: bool = True) -> Node:
    """Generate a wellformed environment with at most size nodes, see gen_expr."""
    return ExpressionGenerator(np.random.default_rng(seed), allow_meta, allow_const).env(size)
