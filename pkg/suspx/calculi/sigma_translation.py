# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Translations between the suspension calculus and the lambda-sigma calculus."""

import typing

from suspx._backends.tree import Node
from suspx.calculi.sigma import Comp, Dot, Id, index, One, SigClosure, SigShift
from suspx.errors import LevelViolation, TranslationError
from suspx.lambda_core.debruijn import Abs, App, Index
from suspx.syntax.expressions import Cons, EnvTerm, Merged, Nil, Susp
from suspx.syntax.levels import monus


def susp_to_sigma(t: Node) -> Node:
    """
    Translate a suspension term without constants and meta variables into a lambda-sigma term.

    Parameters
    ----------
    t
        Wellformed suspension term.

    Returns
    -------
    :
        The lambda-sigma term, where each suspension becomes a closure over the substitution env_to_sigma builds.
    """
    if isinstance(t, Index):
        return index(t.i)
    elif isinstance(t, App):
        return App(susp_to_sigma(t.fun), susp_to_sigma(t.arg))
    elif isinstance(t, Abs):
        return Abs(susp_to_sigma(t.body), t.ann)
    elif isinstance(t, Susp):
        return SigClosure(susp_to_sigma(t.term), env_to_sigma(t.env, t.nl))
    else:
        raise TranslationError(f"{type(t).__name__} has no lambda-sigma counterpart")


def _shifted(s: Node, times: int) -> Node:
    for _ in range(times):
        s = Comp(s, SigShift())
    return s


def env_to_sigma(e: Node, j: int) -> Node:
    """
    Translate an environment read at embedding level j into a lambda-sigma substitution.

    Parameters
    ----------
    e
        Wellformed environment.
    j
        Embedding level, not smaller than the level of e.

    Returns
    -------
    :
        The substitution, in which every pending renumbering is a left-nested chain of shifts.
    """
    if isinstance(e, Nil):
        return _shifted(Id(), j)
    elif isinstance(e, Cons):
        n = e.head.level
        if j < n:
            raise LevelViolation(f"Environment of level {n} read at embedding level {j}")
        return _shifted(Dot(susp_to_sigma(e.head.term), env_to_sigma(e.tail, n)), j - n)
    elif isinstance(e, Merged):
        j2 = j - monus(e.nl1, e.ol2)
        if j2 < 0:
            raise LevelViolation(f"Merged environment read at embedding level {j} below {monus(e.nl1, e.ol2)}")
        return Comp(env_to_sigma(e.e1, e.nl1), env_to_sigma(e.e2, j2))
    else:
        raise TranslationError(f"{type(e).__name__} is not an environment")


def _shift_count(s: Node) -> typing.Optional[int]:
    """Return n if s is a left-nested chain of n shifts, None otherwise."""
    count = 0
    while isinstance(s, Comp) and isinstance(s.right, SigShift):
        count += 1
        s = s.left
    return count + 1 if isinstance(s, SigShift) else None


def sigma_to_susp(a: Node) -> Node:
    """Translate a lambda-sigma term into a suspension term; a closure of One over n shifts becomes #(n+1)."""
    if isinstance(a, One):
        return Index(1)
    elif isinstance(a, App):
        return App(sigma_to_susp(a.fun), sigma_to_susp(a.arg))
    elif isinstance(a, Abs):
        return Abs(sigma_to_susp(a.body), a.ann)
    elif isinstance(a, SigClosure):
        if isinstance(a.term, One):
            count = _shift_count(a.sub)
            if count is not None:
                return Index(count + 1)
        ol, nl, e = sigma_sub_to_env(a.sub)
        return Susp(sigma_to_susp(a.term), ol, nl, e)
    else:
        raise TranslationError(f"{type(a).__name__} is not a lambda-sigma term")


def sigma_sub_to_env(s: Node) -> typing.Tuple[int, int, Node]:
    """
    Translate a lambda-sigma substitution into an old embedding level, a new one and an environment.

    A composition with a trailing shift only raises the new embedding level, taking priority over the general
    composition case.
    """
    if isinstance(s, Id):
        return 0, 0, Nil()
    elif isinstance(s, SigShift):
        return 0, 1, Nil()
    elif isinstance(s, Dot):
        ol, nl, e = sigma_sub_to_env(s.sub)
        return ol + 1, nl, Cons(EnvTerm(sigma_to_susp(s.term), nl), e)
    elif isinstance(s, Comp):
        if isinstance(s.right, SigShift):
            ol, nl, e = sigma_sub_to_env(s.left)
            return ol, nl + 1, e
        ol1, nl1, e1 = sigma_sub_to_env(s.left)
        ol2, nl2, e2 = sigma_sub_to_env(s.right)
        return ol1 + monus(ol2, nl1), nl2 + monus(nl1, ol2), Merged(e1, nl1, ol2, e2)
    else:
        raise TranslationError(f"{type(s).__name__} is not a lambda-sigma substitution")
