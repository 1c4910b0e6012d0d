# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""
Suspension expressions.

Terms extend the de Bruijn terms with meta variables and suspensions [t, ol, nl, e]; environments are
nil, conses of environment terms (t, l), and merged environments {e1, nl1, ol2, e2}. All of them form
a single tree family addressed by positions.
"""

import dataclasses
import typing

from suspx._backends.tree import Node, preorder
from suspx.lambda_core.debruijn import Abs, App, Const, Index


@dataclasses.dataclass(frozen=True)
class MetaVar(Node):
    """An instantiable meta variable."""

    name: str


@dataclasses.dataclass(frozen=True)
class Susp(Node):
    """The suspension [term, ol, nl, env]."""

    term: Node
    ol: int
    nl: int
    env: Node

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("term", "env")


@dataclasses.dataclass(frozen=True)
class Nil(Node):
    """The empty environment."""


@dataclasses.dataclass(frozen=True)
class EnvTerm(Node):
    """The environment term (term, level)."""

    term: Node
    level: int

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("term", )


@dataclasses.dataclass(frozen=True)
class Cons(Node):
    """The environment head :: tail."""

    head: EnvTerm
    tail: Node

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("head", "tail")


@dataclasses.dataclass(frozen=True)
class Merged(Node):
    """The merged environment {e1, nl1, ol2, e2}."""

    e1: Node
    nl1: int
    ol2: int
    e2: Node

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ("e1", "e2")


SuspTerm = typing.Union[Const, MetaVar, Index, App, Abs, Susp]
SuspEnv = typing.Union[Nil, Cons, Merged]
SuspExpr = typing.Union[SuspTerm, SuspEnv, EnvTerm]

TERM_TYPES = (Const, MetaVar, Index, App, Abs, Susp)
ENV_TYPES = (Nil, Cons, Merged)


def is_term(x: Node) -> bool:
    """Tell whether x is a term, as opposed to an environment or an environment term."""
    return isinstance(x, TERM_TYPES)


def is_env(x: Node) -> bool:
    """Tell whether x is an environment."""
    return isinstance(x, ENV_TYPES)


def env_list(*entries: typing.Tuple[Node, int], tail: typing.Optional[Node] = None) -> Node:
    """Build the environment (t0, l0) :: ... :: tail, with nil as default tail."""
    result: Node = tail if tail is not None else Nil()
    for (term, level) in reversed(entries):
        result = Cons(EnvTerm(term, level), result)
    return result


def contains_meta(x: Node) -> bool:
    """Tell whether a meta variable occurs in x."""
    return any(isinstance(node, MetaVar) for (_, node) in preorder(x))


def contains_susp(x: Node) -> bool:
    """Tell whether a suspension or an environment occurs in x."""
    return any(isinstance(node, (Susp, Nil, Cons, Merged, EnvTerm)) for (_, node) in preorder(x))
