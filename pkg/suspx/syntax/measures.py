# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Length, level and index of environments."""

from suspx._backends.tree import Node
from suspx.syntax.expressions import Cons, Merged, Nil
from suspx.syntax.levels import monus


def env_len(e: Node) -> int:
    """Return the number of entries denoted by an environment."""
    length = 0
    while isinstance(e, Cons):
        length += 1
        e = e.tail
    if isinstance(e, Nil):
        return length
    assert isinstance(e, Merged), f"Not an environment: {e!r}"
    return length + env_len(e.e1) + monus(e.ol2, e.nl1)


def env_lev(e: Node) -> int:
    """Return the level of an environment, an upper bound on the embedding level of its first entry."""
    if isinstance(e, Nil):
        return 0
    elif isinstance(e, Cons):
        return e.head.level
    else:
        assert isinstance(e, Merged), f"Not an environment: {e!r}"
        return env_lev(e.e2) + monus(e.nl1, e.ol2)


def env_ind(e: Node, i: int = 0) -> int:
    """
    Return the i-th index of an environment.

    Parameters
    ----------
    e
        Environment.
    i
        Entry of interest, counting from zero.

    Returns
    -------
    :
        The embedding level of the i-th entry once e is evaluated, zero past the end of a nil-terminated list.
    """
    while isinstance(e, Cons):
        if i == 0:
            return e.head.level
        i -= 1
        e = e.tail
    if isinstance(e, Nil):
        return 0
    assert isinstance(e, Merged), f"Not an environment: {e!r}"
    length = env_len(e.e1)
    if i >= length:
        return env_ind(e.e2, i - length + e.nl1)
    ind_e1 = env_ind(e.e1, i)
    m = monus(e.nl1, ind_e1)
    if env_len(e.e2) > m:
        return env_ind(e.e2, m) + monus(e.nl1, e.ol2)
    else:
        return ind_e1
