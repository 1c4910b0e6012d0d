# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Wrapper around lark parsers reporting failures as SuspX parse errors."""

import typing

import lark
import lark.exceptions

from suspx.errors import ParseError


class Grammar(object):
    """
    A lark grammar paired with the transformer building expressions out of its parse trees.

    Parameters
    ----------
    source
        Grammar in lark syntax.
    transformer
        Transformer from parse trees to expressions.
    start
        Start symbol.

    Attributes
    ----------
    _parser
        Lark parser built from the grammar source.
    _transformer
        Transformer provided as input.
    """

    def __init__(self, source: str, transformer: lark.Transformer, start: str) -> None:  # type: ignore[type-arg]
        self._parser = lark.Lark(source, start=start)
        self._transformer = transformer

    def parse(self, text: str) -> typing.Any:
        """Parse text and transform the resulting tree."""
        try:
            tree = self._parser.parse(text)
        except lark.exceptions.UnexpectedInput as e:
            line, column = e.line, e.column
            if line < 0:
                # End of input: point just past the last character.
                lines = text.split("\n")
                line, column = len(lines), len(lines[-1]) + 1
            raise ParseError(f"Unexpected input near {_excerpt(text, line, column)!r}", line, column)
        try:
            return self._transformer.transform(tree)
        except lark.exceptions.VisitError as e:
            raise e.orig_exc


def _excerpt(text: str, line: int, column: int) -> str:
    """Return the few characters around a line and column."""
    lines = text.split("\n")
    if not 1 <= line <= len(lines):
        return ""
    return lines[line - 1][max(column - 1, 0):column + 9]


# Terminals shared by every grammar of the package
COMMON_TERMINALS = r"""
    IDENT: /[A-Za-z_][A-Za-z0-9_']*/
    NAT: /[0-9]+/
    %import common.WS
    %ignore WS
"""
