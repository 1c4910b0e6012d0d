# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Type checking of annotated suspension terms, including the judgment on environments."""

from suspx._backends.tree import Node
from suspx.errors import EnvJudgmentFailure, LevelMismatch, MissingAnnotation, TypeCheckError, UntypableMetaVariable
from suspx.lambda_core.debruijn import Abs, App, Const, Index
from suspx.lambda_core.simple_types import Arrow, SimpleType
from suspx.syntax.expressions import Cons, Merged, MetaVar, Nil, Susp
from suspx.syntax.levels import monus
from suspx.typecheck.check_db import apply_type
from suspx.typecheck.contexts import Context, Signature


def typecheck_susp(ctx: Context, sig: Signature, t: Node) -> SimpleType:
    """
    Compute the type of an annotated suspension term.

    Parameters
    ----------
    ctx
        Types of the free indices.
    sig
        Types of the constants.
    t
        Term whose abstractions are all annotated, and without meta variables.

    Returns
    -------
    :
        The type of t.
    """
    if isinstance(t, Const):
        return sig.lookup(t.name)
    elif isinstance(t, Index):
        return ctx.lookup(t.i)
    elif isinstance(t, MetaVar):
        raise UntypableMetaVariable(f"Meta variable ?{t.name} has no type")
    elif isinstance(t, App):
        return apply_type(typecheck_susp(ctx, sig, t.fun), typecheck_susp(ctx, sig, t.arg))
    elif isinstance(t, Abs):
        if t.ann is None:
            raise MissingAnnotation("Cannot type an unannotated abstraction")
        return Arrow(t.ann, typecheck_susp(ctx.push(t.ann), sig, t.body))
    elif isinstance(t, Susp):
        try:
            inner = infer_env(ctx, sig, t.env, t.nl)
        except TypeCheckError as e:
            raise EnvJudgmentFailure(t.env, t.nl, e) from e
        return typecheck_susp(inner, sig, t.term)
    else:
        raise TypeError(f"Not a suspension term: {t!r}")


def infer_env(ctx: Context, sig: Signature, e: Node, nl: int) -> Context:
    """
    Compute the context in which the body of a suspension with environment e and new level nl is typed.

    Parameters
    ----------
    ctx
        Context of the suspension.
    sig
        Types of the constants.
    e
        Environment.
    nl
        New embedding level.

    Returns
    -------
    :
        The context Gamma' such that ctx |- e =>nl Gamma'.
    """
    while True:
        if isinstance(e, Nil):
            if nl == 0:
                return ctx
            ctx, nl = ctx.peel(), nl - 1
        elif isinstance(e, Cons):
            level = e.head.level
            if nl > level:
                ctx, nl = ctx.peel(), nl - 1
            elif nl == level:
                head_type = typecheck_susp(ctx, sig, e.head.term)
                return infer_env(ctx, sig, e.tail, level).push(head_type)
            else:
                raise LevelMismatch(f"Environment term at level {level} is read at level {nl}")
        elif isinstance(e, Merged):
            outer_level = nl - monus(e.nl1, e.ol2)
            if outer_level < 0:
                raise LevelMismatch(f"Merged environment is read at level {nl}, below its own renumbering")
            outer = infer_env(ctx, sig, e.e2, outer_level)
            return infer_env(outer, sig, e.e1, e.nl1)
        else:
            raise TypeError(f"Not an environment: {e!r}")
