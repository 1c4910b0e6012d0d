# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Implementation of the subcommands of the suspx executable, each returning the text to be printed."""

import logging
import pathlib
import typing

from suspx._backends.rewriting import TraceStep
from suspx._backends.tree import Node
from suspx.calculi import (
    ls_normalize, ls_to_susp, LsRuleset, sigma_normalize, sigma_to_susp, SigmaRuleset, susp_to_sigma,
    ups_normalize, ups_to_susp, UpsRuleset)
from suspx.errors import IllFormedInputs, TranslationError
from suspx.io import (
    export_expression, export_trace, export_type, import_context, import_expression, import_signature, Language, Timer)
from suspx.lambda_core.conversion import from_debruijn, to_debruijn
from suspx.lambda_core.named import free_vars
from suspx.lambda_core.reduction import beta_derivation
from suspx.measures import essence, eta, mu
from suspx.rewrite import full_normalize, head_normalize, MetaMode, rm_derivation
from suspx.syntax.wellformed import check_wellformed
from suspx.typecheck import Context, Signature, typecheck_db, typecheck_susp

logger = logging.getLogger(__name__)

# Command line names of the calculi, lambda-s_e sharing the lambda-s syntax
CALCULI: typing.Dict[str, Language] = {
    "named": Language.NAMED,
    "db": Language.DE_BRUIJN,
    "susp": Language.SUSPENSION,
    "sigma": Language.SIGMA,
    "upsilon": Language.UPSILON,
    "s": Language.LAMBDA_S,
    "se": Language.LAMBDA_S
}

STRATEGIES = ("rm", "full", "head", "ghead")

TRANSLATIONS = (
    ("named", "db"), ("db", "named"), ("susp", "sigma"), ("sigma", "susp"), ("upsilon", "susp"), ("s", "susp"),
    ("se", "susp"))


def _parse_susp(text: str) -> Node:
    x = import_expression(text, Language.SUSPENSION)
    violation = check_wellformed(x)
    if violation is not None:
        raise IllFormedInputs(f"Ill-formed suspension expression {violation}")
    return x


def parse(text: str, calculus: str = "susp") -> str:
    """Parse an expression and print it back in canonical form."""
    language = CALCULI[calculus]
    x = _parse_susp(text) if language == Language.SUSPENSION else import_expression(text, language)
    return export_expression(x, language)


def _normalize_susp(
    x: Node, strategy: str, max_steps: int, mode: MetaMode
) -> typing.Tuple[Node, typing.List[TraceStep]]:
    if strategy == "rm":
        return rm_derivation(x, mode)
    elif strategy == "full":
        return full_normalize(x, max_steps, mode)
    else:
        return head_normalize(x, max_steps, generalized=(strategy == "ghead"), mode=mode)


def normalize(
    text: str, calculus: str = "susp", strategy: str = "full", max_steps: int = 10000, logical_meta: bool = False
) -> typing.Tuple[str, typing.List[TraceStep]]:
    """
    Normalize an expression.

    Parameters
    ----------
    text
        Concrete syntax of the expression.
    calculus
        Command line name of the calculus.
    strategy
        One of rm, full, head and ghead. De Bruijn terms have no reading or merging redexes, hence rm leaves them
        untouched, while head and ghead coincide. The other calculi read rm as their substitution rules only, and
        every other strategy as their whole ruleset.
    max_steps
        Budget of beta steps.
    logical_meta
        Whether meta variables are logical, enabling the erasure rule r7.

    Returns
    -------
    :
        A tuple containing the printed normal form and the derivation leading to it.
        BudgetExhausted propagates when the budget runs out.
    """
    language = CALCULI[calculus]
    logger.info("Normalizing %s expression with strategy %s and at most %d steps", calculus, strategy, max_steps)
    with Timer(label=f"{strategy} normalization of {calculus} expression"):
        if calculus == "susp":
            mode = MetaMode.LOGICAL if logical_meta else MetaMode.GRAFTABLE
            result, trace = _normalize_susp(_parse_susp(text), strategy, max_steps, mode)
        elif calculus == "db":
            t = import_expression(text, language)
            if strategy == "rm":
                result, trace = t, []
            else:
                result, trace = beta_derivation(t, max_steps, head_only=(strategy in ("head", "ghead")))
        elif calculus == "upsilon":
            ruleset = UpsRuleset.UPSILON if strategy == "rm" else UpsRuleset.FULL
            result, trace = ups_normalize(import_expression(text, language), max_steps, ruleset)
        elif calculus == "sigma":
            sigma_ruleset = SigmaRuleset.SIGMA if strategy == "rm" else SigmaRuleset.FULL
            result, trace = sigma_normalize(import_expression(text, language), max_steps, sigma_ruleset)
        elif calculus in ("s", "se"):
            if strategy == "rm":
                ls_ruleset = LsRuleset.S
            else:
                ls_ruleset = LsRuleset.FULL if calculus == "s" else LsRuleset.SE_FULL
            result, trace = ls_normalize(import_expression(text, language), max_steps, ls_ruleset)
        else:
            raise ValueError(f"Calculus {calculus} cannot be normalized")
    return export_expression(result, language), trace


def print_trace(trace: typing.Sequence[TraceStep], calculus: str) -> str:
    """Print a derivation as JSON lines, in the syntax of the given calculus."""
    return export_trace(trace, CALCULI[calculus])


def translate(text: str, source: str, target: str, free: typing.Optional[typing.Sequence[str]] = None) -> str:
    """
    Translate an expression between two calculi.

    Parameters
    ----------
    text
        Concrete syntax of the expression.
    source
        Command line name of the calculus of the input.
    target
        Command line name of the calculus of the output.
    free
        Listing of the free variables, the first one standing for the first free index. Named terms default to
        their free variables in sorted order.

    Returns
    -------
    :
        The printed translation.
    """
    if (source, target) not in TRANSLATIONS:
        raise TranslationError(f"No translation from {source} to {target}")
    x = import_expression(text, CALCULI[source])
    if source == "named":
        result = to_debruijn(x, free if free is not None else sorted(free_vars(x)))
    elif source == "db":
        result = from_debruijn(x, free if free is not None else [])
    elif source == "susp":
        result = susp_to_sigma(x)
    elif source == "sigma":
        result = sigma_to_susp(x)
    elif source == "upsilon":
        result = ups_to_susp(x)
    else:
        result = ls_to_susp(x)
    return export_expression(result, CALCULI[target])


def typecheck(
    text: str, calculus: str = "susp", sig_path: typing.Optional[str] = None, context_types: str = ""
) -> str:
    """
    Infer the type of a term.

    Parameters
    ----------
    text
        Concrete syntax of the term.
    calculus
        Either susp or db.
    sig_path
        Path of the signature file declaring the constants. None means the empty signature.
    context_types
        Comma separated types of the free indices, the type of #1 first.

    Returns
    -------
    :
        The printed type. TypeCheckError propagates when the term is not typable.
    """
    sig = import_signature(pathlib.Path(sig_path).read_text()) if sig_path is not None else Signature()
    ctx = Context(import_context(context_types))
    if calculus == "db":
        type_ = typecheck_db(ctx, sig, import_expression(text, Language.DE_BRUIJN))
    elif calculus == "susp":
        type_ = typecheck_susp(ctx, sig, _parse_susp(text))
    else:
        raise ValueError(f"Calculus {calculus} cannot be typechecked")
    return export_type(type_)


def measure(text: str) -> str:
    """Print the potential, the weighted sizes eta_0 to eta_3 and the essence of a suspension expression."""
    x = _parse_susp(text)
    lines = [f"mu: {mu(x)}"]
    lines.extend(f"eta_{i}: {eta(i, x)}" for i in range(4))
    lines.append(f"essence: {essence(x)}")
    return "\n".join(lines)
