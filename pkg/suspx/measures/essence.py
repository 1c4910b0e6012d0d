# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""First-order terms abstracting suspension expressions, to be compared by a path ordering."""

import dataclasses
import typing

from suspx._backends.tree import Node
from suspx.lambda_core.debruijn import Abs, App, Const, Index
from suspx.measures.size import eta
from suspx.syntax.expressions import Cons, EnvTerm, Merged, MetaVar, Nil, Susp


class FOTerm(object):
    """Base class of first-order terms."""

    def arguments(self) -> typing.Tuple["FOTerm", ...]:
        """Return the arguments of the root symbol."""
        return tuple(getattr(self, field.name) for field in dataclasses.fields(self) if field.name != "i")


@dataclasses.dataclass(frozen=True)
class Star(FOTerm):
    """The constant symbol."""

    def __str__(self) -> str:
        """Print in prefix notation."""
        return "*"


@dataclasses.dataclass(frozen=True)
class Lam(FOTerm):
    """The unary abstraction symbol."""

    arg: FOTerm

    def __str__(self) -> str:
        """Print in prefix notation."""
        return f"lam({self.arg})"


@dataclasses.dataclass(frozen=True)
class AppF(FOTerm):
    """The binary application symbol."""

    a: FOTerm
    b: FOTerm

    def __str__(self) -> str:
        """Print in prefix notation."""
        return f"app({self.a},{self.b})"


@dataclasses.dataclass(frozen=True)
class ConsF(FOTerm):
    """The binary environment constructor symbol."""

    a: FOTerm
    b: FOTerm

    def __str__(self) -> str:
        """Print in prefix notation."""
        return f"cons({self.a},{self.b})"


@dataclasses.dataclass(frozen=True)
class S(FOTerm):
    """The binary symbol s_i, standing for suspensions and merged environments of size i."""

    i: int
    a: FOTerm
    b: FOTerm

    def __str__(self) -> str:
        """Print in prefix notation."""
        return f"s{self.i}({self.a},{self.b})"


def essence(x: Node) -> FOTerm:
    """Translate a suspension expression into its first-order essence."""
    if isinstance(x, (Const, MetaVar, Index, Nil)):
        return Star()
    elif isinstance(x, App):
        return AppF(essence(x.fun), essence(x.arg))
    elif isinstance(x, Abs):
        return Lam(essence(x.body))
    elif isinstance(x, Susp):
        return S(eta(0, x), essence(x.term), essence(x.env))
    elif isinstance(x, EnvTerm):
        return essence(x.term)
    elif isinstance(x, Cons):
        return ConsF(essence(x.head), essence(x.tail))
    elif isinstance(x, Merged):
        return S(eta(0, x), essence(x.e1), essence(x.e2))
    else:
        raise TypeError(f"Not a suspension expression: {x!r}")
