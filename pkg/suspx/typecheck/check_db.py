# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Type checking of annotated de Bruijn terms in the simply typed lambda calculus."""

from suspx._backends.tree import Node
from suspx.errors import ApplicationMismatch, MissingAnnotation
from suspx.lambda_core.debruijn import Abs, App, Const, Index
from suspx.lambda_core.simple_types import Arrow, SimpleType
from suspx.typecheck.contexts import Context, Signature


def apply_type(fun_type: SimpleType, arg_type: SimpleType) -> SimpleType:
    """Return the type of an application, given the types of the function and of the argument."""
    if not isinstance(fun_type, Arrow):
        raise ApplicationMismatch(f"Applying a term of non-functional type {fun_type}")
    if fun_type.dom != arg_type:
        raise ApplicationMismatch(f"Function expects {fun_type.dom}, but the argument has type {arg_type}")
    return fun_type.cod


def typecheck_db(ctx: Context, sig: Signature, t: Node) -> SimpleType:
    """
    Compute the type of an annotated de Bruijn term.

    Parameters
    ----------
    ctx
        Types of the free indices.
    sig
        Types of the constants.
    t
        Term whose abstractions are all annotated.

    Returns
    -------
    :
        The type of t.
    """
    if isinstance(t, Const):
        return sig.lookup(t.name)
    elif isinstance(t, Index):
        return ctx.lookup(t.i)
    elif isinstance(t, App):
        return apply_type(typecheck_db(ctx, sig, t.fun), typecheck_db(ctx, sig, t.arg))
    elif isinstance(t, Abs):
        if t.ann is None:
            raise MissingAnnotation("Cannot type an unannotated abstraction")
        return Arrow(t.ann, typecheck_db(ctx.push(t.ann), sig, t.body))
    else:
        raise TypeError(f"Not a de Bruijn term: {t!r}")
