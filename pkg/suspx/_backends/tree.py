# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Immutable expression trees addressed by positions."""

import dataclasses
import typing

from suspx.errors import BadPosition

Position = typing.Tuple[int, ...]
NodeType = typing.TypeVar("NodeType", bound="Node")


class Node(object):
    """
    Base class of every expression node.

    Concrete nodes are frozen dataclasses listing, in ordinal order, the names of the fields holding
    their children in the class variable _children. Every other field is a plain datum.
    """

    _children: typing.ClassVar[typing.Tuple[str, ...]] = ()


def children(node: Node) -> typing.Tuple[Node, ...]:
    """Return the children of a node, in ordinal order."""
    return tuple(getattr(node, name) for name in node._children)


def replace_child(node: NodeType, ordinal: int, child: Node) -> NodeType:
    """Return a copy of node with the child of given ordinal replaced."""
    if not 0 <= ordinal < len(node._children):
        raise BadPosition(f"{type(node).__name__} has no child {ordinal}")
    return dataclasses.replace(node, **{node._children[ordinal]: child})  # type: ignore[type-var]


def map_children(node: NodeType, function: typing.Callable[[Node], Node]) -> NodeType:
    """Return a copy of node with function applied to each of its children."""
    if len(node._children) == 0:
        return node
    return dataclasses.replace(  # type: ignore[type-var]
        node, **{name: function(getattr(node, name)) for name in node._children})


def subexpression(node: Node, position: Position) -> Node:
    """
    Return the subexpression of node at position.

    Parameters
    ----------
    node
        Root of the expression.
    position
        Child ordinals from the root.

    Returns
    -------
    :
        The addressed subexpression.
    """
    current = node
    for depth, ordinal in enumerate(position):
        if not 0 <= ordinal < len(current._children):
            raise BadPosition(f"Position {format_position(position)} is invalid at depth {depth}")
        current = getattr(current, current._children[ordinal])
    return current


def replace_subexpression(node: NodeType, position: Position, replacement: Node) -> NodeType:
    """Return a copy of node in which the subexpression at position is replaced."""
    if len(position) == 0:
        return replacement  # type: ignore[return-value]
    # Collect the spine first, then rebuild it bottom up.
    spine = [node]
    for ordinal in position[:-1]:
        spine.append(subexpression(spine[-1], (ordinal, )))
    current = replacement
    for parent, ordinal in zip(reversed(spine), reversed(position)):
        current = replace_child(parent, ordinal, current)
    return current  # type: ignore[return-value]


def preorder(node: Node) -> typing.Iterator[typing.Tuple[Position, Node]]:
    """Iterate over (position, subexpression) pairs, parents before children and left before right."""
    stack: typing.List[typing.Tuple[Position, Node]] = [((), node)]
    while len(stack) > 0:
        position, current = stack.pop()
        yield position, current
        for ordinal in reversed(range(len(current._children))):
            stack.append((position + (ordinal, ), getattr(current, current._children[ordinal])))


def node_count(node: Node) -> int:
    """Count the nodes of an expression."""
    return sum(1 for _ in preorder(node))


def format_position(position: Position) -> str:
    """Render a position as a slash-joined ordinal path; the root renders as the empty string."""
    return "/".join(str(ordinal) for ordinal in position)


def parse_position(text: str) -> Position:
    """Inverse of format_position."""
    if text == "":
        return ()
    try:
        return tuple(int(ordinal) for ordinal in text.split("/"))
    except ValueError:
        raise BadPosition(f"Malformed position {text!r}")
