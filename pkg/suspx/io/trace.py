# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Export, import and replay of derivations as JSON lines."""

import dataclasses
import json
import typing

from suspx._backends.rewriting import apply_rule, Rule, TraceStep
from suspx._backends.tree import format_position, Node, parse_position
from suspx.calculi import lambda_s, sigma, upsilon
from suspx.errors import RuleNotApplicable, TraceMismatch
from suspx.io.export import export_expression
from suspx.io.import_ import import_expression
from suspx.io.languages import Language
from suspx.lambda_core.reduction import beta
from suspx.rewrite.rules import RULES as SUSPENSION_RULES


@dataclasses.dataclass(frozen=True)
class TraceRecord(object):
    """
    One line of an exported derivation.

    Attributes
    ----------
    step
        Zero-based index of the step.
    rule
        Identifier of the rule which fired.
    pos
        Slash-joined position of the contracted redex.
    after
        Whole expression after the step, in concrete syntax.
    """

    step: int
    rule: str
    pos: str
    after: str


_RULES: typing.Dict[Language, typing.Dict[str, Rule]] = {
    Language.DE_BRUIJN: {beta.rule_id: beta},
    Language.SUSPENSION: {rule.rule_id: rule for rule in SUSPENSION_RULES.values()},
    Language.UPSILON: upsilon.RULES,
    Language.LAMBDA_S: lambda_s.RULES,
    Language.SIGMA: sigma.RULES
}


def to_records(trace: typing.Sequence[TraceStep], language: Language = Language.SUSPENSION) -> typing.List[TraceRecord]:
    """Convert a derivation into printable records."""
    return [
        TraceRecord(step.step_index, step.rule, format_position(step.position), export_expression(step.after, language))
        for step in trace]


def export_trace(trace: typing.Sequence[TraceStep], language: Language = Language.SUSPENSION) -> str:
    """Print a derivation, one JSON object per line with keys step, rule, pos and after in this order."""
    return "".join(json.dumps(dataclasses.asdict(record)) + "\n" for record in to_records(trace, language))


def import_trace(text: str) -> typing.List[TraceRecord]:
    """Read back the records printed by export_trace, skipping blank lines."""
    records = []
    for line in text.splitlines():
        if line.strip() == "":
            continue
        fields = json.loads(line)
        records.append(TraceRecord(int(fields["step"]), str(fields["rule"]), str(fields["pos"]), str(fields["after"])))
    return records


def replay_trace(
    start: Node, records: typing.Sequence[TraceRecord], language: Language = Language.SUSPENSION
) -> Node:
    """
    Replay a derivation and check every recorded expression.

    Parameters
    ----------
    start
        Expression the derivation starts from.
    records
        Recorded steps.
    language
        Expression family of the derivation.

    Returns
    -------
    :
        The last expression of the derivation. TraceMismatch is raised as soon as a step does not reproduce the
        recorded expression.
    """
    if language not in _RULES:
        raise ValueError(f"No rewrite rules for {language.value} expressions")
    rules = _RULES[language]
    current = start
    for record in records:
        try:
            rule = rules[record.rule]
        except KeyError:
            raise RuleNotApplicable(f"Unknown rule {record.rule!r} at step {record.step}")
        current = apply_rule(current, rule, parse_position(record.pos))
        if current != import_expression(record.after, language):
            raise TraceMismatch(f"Step {record.step} does not reproduce {record.after!r}")
    return current
