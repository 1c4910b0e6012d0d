# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""Print expressions in the concrete syntax read back by suspx.io.import_."""

import typing

from suspx._backends.tree import Node
from suspx.calculi.lambda_s import Phi, Sigma
from suspx.calculi.sigma import Comp, Dot, Id, One, SigClosure, SigShift
from suspx.calculi.upsilon import Lift, Slash, UpsClosure, UpsShift
from suspx.io.languages import Language
from suspx.lambda_core.debruijn import Abs, App, Const, Index
from suspx.lambda_core.named import NAbs, NApp, NConst, NVar
from suspx.lambda_core.simple_types import Arrow, Base, SimpleType
from suspx.syntax.expressions import Cons, Merged, MetaVar, Nil, Susp
from suspx.typecheck.contexts import Signature


def _wrap(text: str, condition: bool) -> str:
    return f"({text})" if condition else text


def export_type(type_: SimpleType) -> str:
    """Print a simple type, arrows associating to the right."""
    if isinstance(type_, Base):
        return type_.name
    elif isinstance(type_, Arrow):
        return f"{_wrap(export_type(type_.dom), isinstance(type_.dom, Arrow))} -> {export_type(type_.cod)}"
    else:
        raise TypeError(f"Not a simple type: {type_!r}")


def export_signature(sig: Signature) -> str:
    """Print a signature, one declaration per line in sorted order."""
    return "".join(f"{name} : {export_type(sig.declarations[name])}\n" for name in sorted(sig.declarations))


def _export_named(t: Node) -> str:
    if isinstance(t, NVar):
        return t.name
    elif isinstance(t, NConst):
        return f"c:{t.name}"
    elif isinstance(t, NApp):
        fun = _wrap(_export_named(t.fun), isinstance(t.fun, NAbs))
        arg = _wrap(_export_named(t.arg), isinstance(t.arg, (NApp, NAbs)))
        return f"{fun} {arg}"
    elif isinstance(t, NAbs):
        ann = f":{export_type(t.ann)}" if t.ann is not None else ""
        return f"\\{t.binder}{ann}. {_export_named(t.body)}"
    else:
        raise TypeError(f"Not a named term: {t!r}")


def _export_annotation(t: Abs) -> str:
    return f":{export_type(t.ann)}. " if t.ann is not None else ""


def _export_de_bruijn(t: Node) -> str:
    if isinstance(t, Index):
        return f"#{t.i}"
    elif isinstance(t, Const):
        return f"c:{t.name}"
    elif isinstance(t, App):
        fun = _wrap(_export_de_bruijn(t.fun), isinstance(t.fun, Abs))
        arg = _wrap(_export_de_bruijn(t.arg), isinstance(t.arg, (App, Abs)))
        return f"{fun} {arg}"
    elif isinstance(t, Abs):
        return f"\\{_export_annotation(t)} {_export_de_bruijn(t.body)}"
    else:
        raise TypeError(f"Not a de Bruijn term: {t!r}")


def _export_suspension(x: Node) -> str:
    if isinstance(x, Index):
        return f"#{x.i}"
    elif isinstance(x, Const):
        return f"c:{x.name}"
    elif isinstance(x, MetaVar):
        return f"?{x.name}"
    elif isinstance(x, App):
        return f"({_export_suspension(x.fun)} {_export_suspension(x.arg)})"
    elif isinstance(x, Abs):
        return f"\\{_export_annotation(x)}{_export_suspension(x.body)}"
    elif isinstance(x, Susp):
        return f"[{_export_suspension(x.term)}, {x.ol}, {x.nl}, {_export_suspension(x.env)}]"
    elif isinstance(x, Nil):
        return "nil"
    elif isinstance(x, Cons):
        return f"({_export_suspension(x.head.term)}, {x.head.level}) :: {_export_suspension(x.tail)}"
    elif isinstance(x, Merged):
        return f"{{{_export_suspension(x.e1)}, {x.nl1}, {x.ol2}, {_export_suspension(x.e2)}}}"
    else:
        raise TypeError(f"Not a suspension expression: {x!r}")


def _export_upsilon(x: Node) -> str:
    if isinstance(x, Index):
        return str(x.i)
    elif isinstance(x, App):
        fun = _wrap(_export_upsilon(x.fun), isinstance(x.fun, Abs))
        arg = _wrap(_export_upsilon(x.arg), isinstance(x.arg, (App, Abs)))
        return f"{fun} {arg}"
    elif isinstance(x, Abs):
        return f"\\ {_export_upsilon(x.body)}"
    elif isinstance(x, UpsClosure):
        return f"{_wrap(_export_upsilon(x.term), isinstance(x.term, (App, Abs)))}[{_export_upsilon(x.sub)}]"
    elif isinstance(x, Slash):
        return f"{_export_upsilon(x.term)}/"
    elif isinstance(x, Lift):
        return f"^({_export_upsilon(x.sub)})"
    elif isinstance(x, UpsShift):
        return "!"
    else:
        raise TypeError(f"Not a lambda-upsilon expression: {x!r}")


def _export_lambda_s(x: Node) -> str:
    if isinstance(x, Index):
        return str(x.i)
    elif isinstance(x, App):
        fun = _wrap(_export_lambda_s(x.fun), isinstance(x.fun, (Abs, Sigma)))
        arg = _wrap(_export_lambda_s(x.arg), isinstance(x.arg, (App, Abs, Sigma)))
        return f"{fun} {arg}"
    elif isinstance(x, Abs):
        return f"\\ {_export_lambda_s(x.body)}"
    elif isinstance(x, Sigma):
        term = _wrap(_export_lambda_s(x.term), isinstance(x.term, Abs))
        arg = _wrap(_export_lambda_s(x.arg), isinstance(x.arg, (Abs, Sigma)))
        return f"{term} s{{{x.i}}} {arg}"
    elif isinstance(x, Phi):
        return f"phi{{{x.k},{x.i}}} {_wrap(_export_lambda_s(x.term), isinstance(x.term, (App, Abs, Sigma)))}"
    else:
        raise TypeError(f"Not a lambda-s term: {x!r}")


def _export_sigma(x: Node) -> str:
    if isinstance(x, One):
        return "1"
    elif isinstance(x, App):
        fun = _wrap(_export_sigma(x.fun), isinstance(x.fun, Abs))
        arg = _wrap(_export_sigma(x.arg), isinstance(x.arg, (App, Abs)))
        return f"{fun} {arg}"
    elif isinstance(x, Abs):
        return f"\\ {_export_sigma(x.body)}"
    elif isinstance(x, SigClosure):
        return f"{_wrap(_export_sigma(x.term), isinstance(x.term, (App, Abs)))}[{_export_sigma(x.sub)}]"
    elif isinstance(x, Id):
        return "id"
    elif isinstance(x, SigShift):
        return "!"
    elif isinstance(x, Dot):
        term = _wrap(_export_sigma(x.term), isinstance(x.term, (App, Abs)))
        return f"{term} . {_wrap(_export_sigma(x.sub), isinstance(x.sub, Comp))}"
    elif isinstance(x, Comp):
        return f"{_export_sigma(x.left)} o {_wrap(_export_sigma(x.right), isinstance(x.right, (Comp, Dot)))}"
    else:
        raise TypeError(f"Not a lambda-sigma expression: {x!r}")


_PRINTERS: typing.Dict[Language, typing.Callable[[Node], str]] = {
    Language.NAMED: _export_named,
    Language.DE_BRUIJN: _export_de_bruijn,
    Language.SUSPENSION: _export_suspension,
    Language.UPSILON: _export_upsilon,
    Language.LAMBDA_S: _export_lambda_s,
    Language.SIGMA: _export_sigma
}


def export_expression(x: Node, language: Language = Language.SUSPENSION) -> str:
    """
    Print an expression.

    Parameters
    ----------
    x
        Expression to be printed.
    language
        Concrete syntax to be used.

    Returns
    -------
    :
        A single line of text which suspx.io.import_expression parses back into x.
    """
    return _PRINTERS[language](x)
