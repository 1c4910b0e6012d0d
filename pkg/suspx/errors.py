# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Exceptions raised by SuspX."""

import typing

if typing.TYPE_CHECKING:  # pragma: no cover
    from suspx._backends.rewriting import TraceStep
    from suspx._backends.tree import Node


class SuspxError(RuntimeError):
    """Base class of every error raised by SuspX."""


class UnknownFreeVariable(SuspxError):
    """A free variable is missing from the listing used for the nameless encoding."""


class DuplicateFreeVariable(SuspxError):
    """The free variable listing used for the nameless encoding names a variable twice."""


class DanglingIndex(SuspxError):
    """A de Bruijn index points past both the binders and the free variable listing."""


class IndexUnderflow(SuspxError):
    """Renumbering would produce a de Bruijn index smaller than one."""


class NotARedex(SuspxError):
    """The addressed subterm is not a beta-redex."""


class BadPosition(SuspxError):
    """A position does not address a subexpression."""


class RuleNotApplicable(SuspxError):
    """A rewrite rule does not match at the requested position."""


class LevelsOverflow(SuspxError):
    """An embedding level or index left the 64-bit range."""


class NotSimple(SuspxError):
    """An operation on simple environments received a merged environment."""


class NotHNF(SuspxError):
    """An expression is not in head normal form."""


class IllFormedInputs(SuspxError):
    """The inputs of a checker violate its wellformedness precondition."""


class LevelViolation(SuspxError):
    """An environment is read at an embedding level below its own level."""


class TranslationError(SuspxError):
    """An expression has no image in the target calculus."""


class PatternNotFound(SuspxError):
    """A reduction pattern expected in a derivation could not be located."""


class TraceMismatch(SuspxError):
    """Replaying a recorded step does not reproduce the recorded expression."""


class BudgetExhausted(SuspxError):
    """
    A reduction ran out of its step budget.

    Parameters
    ----------
    partial
        Expression reached when the budget ran out.
    steps
        Number of budgeted steps performed.
    trace
        Steps performed so far, when recorded.
    """

    def __init__(
        self, partial: "Node", steps: int, trace: typing.Optional[typing.List["TraceStep"]] = None
    ) -> None:
        super().__init__(f"Budget exhausted after {steps} steps")
        self.partial = partial
        self.steps = steps
        self.trace: typing.List["TraceStep"] = trace if trace is not None else []


class InternalFuelExhausted(SuspxError):
    """A terminating rewrite system did not terminate within its safety fuel."""


class SigmaFuelExhausted(InternalFuelExhausted):
    """The substitution fragment of the lambda-sigma calculus ran out of fuel."""


class ParseError(SuspxError):
    """
    Concrete syntax could not be parsed.

    Parameters
    ----------
    message
        Human readable description.
    line
        One-based line of the offending character.
    column
        One-based column of the offending character.
    """

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class TypeCheckError(SuspxError):
    """Base class of typing failures."""


class UnboundIndex(TypeCheckError):
    """An index exceeds the depth of the typing context."""


class UnknownConstant(TypeCheckError):
    """A constant has no declaration in the signature."""


class ApplicationMismatch(TypeCheckError):
    """The function side of an application does not accept the argument type."""


class MissingAnnotation(TypeCheckError):
    """An abstraction has no type annotation."""


class UntypableMetaVariable(TypeCheckError):
    """Meta variables carry no typing rule."""


class ContextUnderflow(TypeCheckError):
    """An environment judgment tried to peel an empty context."""


class LevelMismatch(TypeCheckError):
    """No environment judgment applies at the requested level."""


class EnvJudgmentFailure(TypeCheckError):
    """
    The environment of a suspension could not be typed.

    Parameters
    ----------
    env
        Environment whose judgment failed.
    level
        Embedding level of the judgment.
    cause
        Underlying typing failure.
    """

    def __init__(self, env: "Node", level: int, cause: TypeCheckError) -> None:
        super().__init__(f"Environment judgment at level {level} failed: {cause}")
        self.env = env
        self.level = level
        self.cause = cause
