# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Parse expressions, types and signatures."""

import typing

from suspx._backends.parsing import Grammar
from suspx._backends.tree import Node
from suspx.io.grammars import (
    de_bruijn_grammar, lambda_s_grammar, named_grammar, sigma_grammar, signature_grammar, simple_type_grammar,
    suspension_grammar, upsilon_grammar)
from suspx.io.languages import Language
from suspx.lambda_core.simple_types import SimpleType
from suspx.typecheck.contexts import Signature

_GRAMMARS: typing.Dict[Language, Grammar] = {
    Language.NAMED: named_grammar,
    Language.DE_BRUIJN: de_bruijn_grammar,
    Language.SUSPENSION: suspension_grammar,
    Language.UPSILON: upsilon_grammar,
    Language.LAMBDA_S: lambda_s_grammar,
    Language.SIGMA: sigma_grammar
}


def import_expression(text: str, language: Language = Language.SUSPENSION) -> Node:
    """
    Parse an expression.

    Parameters
    ----------
    text
        Concrete syntax of the expression.
    language
        Expression family of the text.

    Returns
    -------
    :
        The parsed expression. ParseError, carrying line and column, is raised on malformed input.
    """
    result: Node = _GRAMMARS[language].parse(text)
    return result


def import_type(text: str) -> SimpleType:
    """Parse a simple type."""
    result: SimpleType = simple_type_grammar.parse(text)
    return result


def import_signature(text: str) -> Signature:
    """Parse a signature file, made of declarations `name : TYPE`."""
    result: Signature = signature_grammar.parse(text)
    return result


def import_context(text: str) -> typing.Tuple[SimpleType, ...]:
    """Parse a comma separated list of types, the type of the index #1 first."""
    if text.strip() == "":
        return ()
    return tuple(import_type(item) for item in text.split(","))

