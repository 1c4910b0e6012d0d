# Copyright (C) 2022 by the SuspX authors
#
# This file is part of SuspX.
#
# SPDX-License-Identifier: LGPL-3.0-or-later
"""
Concrete syntax of every expression family.

Token tables, shared conventions first:
    `\\`      abstraction, its body extending as far right as possible
    `( )`     grouping
    `c:name`  constant
    `?name`   meta variable
    `A -> B`  arrow type, right associative; an annotated abstraction is written `\\x:A. t` (named terms) or
              `\\:A. t` (nameless terms)

Named terms: identifiers are variables, application is juxtaposition.
De Bruijn terms: `#n` is the n-th index, application is juxtaposition.
Suspension expressions: `(t t)` application, `[t, ol, nl, e]` suspension, `nil`, `(t, l) :: e` and
`{e, nl, ol, e}` environments.
Lambda-upsilon: `n` index, `a[s]` closure, `a/` slash, `^(s)` lift, `!` shift.
Lambda-s: `n` index, `a s{i} b` closure (left associative), `phi{k,i} a` update.
Lambda-sigma: `1` first index, `a[s]` closure, `id`, `!` shift, `a . s` cons, `s o t` composition
(left associative).
"""

import typing

import lark

from suspx._backends.parsing import COMMON_TERMINALS, Grammar
from suspx.calculi.lambda_s import Phi, Sigma
from suspx.calculi.sigma import Comp, Dot, Id, One, SigClosure, SigShift
from suspx.calculi.upsilon import Lift, Slash, UpsClosure, UpsShift
from suspx.errors import ParseError
from suspx.lambda_core.debruijn import Abs, App, Const, Index
from suspx.lambda_core.named import NAbs, NApp, NConst, NVar
from suspx.lambda_core.simple_types import Arrow, Base, SimpleType
from suspx.syntax.expressions import Cons, EnvTerm, Merged, MetaVar, Nil, Susp
from suspx.typecheck.contexts import Signature

_TYPES = r"""
    ?type: atype
        | atype "->" type -> arrow
    ?atype: IDENT -> base
        | "(" type ")"
    CONST: /c:[A-Za-z_][A-Za-z0-9_']*/
    META: /\?[A-Za-z_][A-Za-z0-9_']*/
    INDEX: /#[0-9]+/
"""

NAMED = r"""
    ?term: abs
        | app
    abs: "\\" IDENT (":" type)? "." term
    ?app: app atom -> napp
        | atom
    ?atom: IDENT -> nvar
        | CONST -> nconst
        | "(" term ")"
""" + _TYPES + COMMON_TERMINALS

DE_BRUIJN = r"""
    ?term: abs
        | app
    abs: "\\" (":" type ".")? term
    ?app: app atom -> app
        | atom
    ?atom: INDEX -> index
        | CONST -> const
        | "(" term ")"
""" + _TYPES + COMMON_TERMINALS

SUSPENSION = r"""
    ?expr: term
        | env
    ?term: CONST -> const
        | META -> meta
        | INDEX -> index
        | "\\" (":" type ".")? term -> abs
        | "(" term term ")" -> app
        | "[" term "," NAT "," NAT "," env "]" -> susp
    ?env: "nil" -> nil
        | "(" term "," NAT ")" "::" env -> cons
        | "{" env "," NAT "," NAT "," env "}" -> merged
""" + _TYPES + COMMON_TERMINALS

SIMPLE_TYPE = _TYPES + COMMON_TERMINALS

SIGNATURE = r"""
    signature: declaration*
    declaration: IDENT ":" type
""" + _TYPES + COMMON_TERMINALS

UPSILON = r"""
    ?term: abs
        | app
    abs: "\\" term
    ?app: app closure -> app
        | closure
    ?closure: closure "[" sub "]" -> closure
        | atom
    ?atom: NAT -> index
        | "(" term ")"
    ?sub: term "/" -> slash
        | "^" "(" sub ")" -> lift
        | "!" -> shift
""" + COMMON_TERMINALS

LAMBDA_S = r"""
    ?term: abs
        | closure
    abs: "\\" term
    ?closure: closure "s{" NAT "}" app -> sigma
        | app
    ?app: app update -> app
        | update
    ?update: "phi{" NAT "," NAT "}" update -> phi
        | atom
    ?atom: NAT -> index
        | "(" term ")"
""" + COMMON_TERMINALS

SIGMA = r"""
    ?expr: term
        | sub
    ?term: abs
        | app
    abs: "\\" term
    ?app: app closure -> app
        | closure
    ?closure: closure "[" sub "]" -> closure
        | atom
    ?atom: "1" -> one
        | "(" term ")"
    ?sub: sub "o" subatom -> comp
        | subatom
    ?subatom: "id" -> id
        | "!" -> shift
        | closure "." subatom -> dot
        | "(" sub ")"
""" + COMMON_TERMINALS


@lark.v_args(inline=True)
class _TypeTransformer(lark.Transformer):  # type: ignore[type-arg]
    """Build simple types."""

    def base(self, name: lark.Token) -> SimpleType:
        return Base(str(name))

    def arrow(self, dom: SimpleType, cod: SimpleType) -> SimpleType:
        return Arrow(dom, cod)

    def signature(self, *declarations: typing.Tuple[str, SimpleType]) -> Signature:
        return Signature(dict(declarations))

    def declaration(self, name: lark.Token, type_: SimpleType) -> typing.Tuple[str, SimpleType]:
        return str(name), type_


@lark.v_args(inline=True)
class _NamedTransformer(_TypeTransformer):
    """Build named terms."""

    def abs(self, binder: lark.Token, *rest: typing.Any) -> NAbs:
        if len(rest) == 2:
            return NAbs(str(binder), rest[1], rest[0])
        return NAbs(str(binder), rest[0])

    def napp(self, fun: typing.Any, arg: typing.Any) -> NApp:
        return NApp(fun, arg)

    def nvar(self, name: lark.Token) -> NVar:
        return NVar(str(name))

    def nconst(self, token: lark.Token) -> NConst:
        return NConst(str(token)[2:])


@lark.v_args(inline=True)
class _NamelessTransformer(_TypeTransformer):
    """Build de Bruijn terms and suspension expressions."""

    def abs(self, *rest: typing.Any) -> Abs:
        if len(rest) == 2:
            return Abs(rest[1], rest[0])
        return Abs(rest[0])

    def app(self, fun: typing.Any, arg: typing.Any) -> App:
        return App(fun, arg)

    def index(self, token: lark.Token) -> Index:
        return Index(_positive(token, str(token).lstrip("#")))

    def const(self, token: lark.Token) -> Const:
        return Const(str(token)[2:])

    def meta(self, token: lark.Token) -> MetaVar:
        return MetaVar(str(token)[1:])

    def susp(self, term: typing.Any, ol: lark.Token, nl: lark.Token, env: typing.Any) -> Susp:
        return Susp(term, int(ol), int(nl), env)

    def nil(self) -> Nil:
        return Nil()

    def cons(self, term: typing.Any, level: lark.Token, tail: typing.Any) -> Cons:
        return Cons(EnvTerm(term, int(level)), tail)

    def merged(self, e1: typing.Any, nl1: lark.Token, ol2: lark.Token, e2: typing.Any) -> Merged:
        return Merged(e1, int(nl1), int(ol2), e2)


@lark.v_args(inline=True)
class _UpsilonTransformer(_NamelessTransformer):
    """Build lambda-upsilon expressions."""

    def closure(self, term: typing.Any, sub: typing.Any) -> UpsClosure:
        return UpsClosure(term, sub)

    def slash(self, term: typing.Any) -> Slash:
        return Slash(term)

    def lift(self, sub: typing.Any) -> Lift:
        return Lift(sub)

    def shift(self) -> UpsShift:
        return UpsShift()


@lark.v_args(inline=True)
class _LambdaSTransformer(_NamelessTransformer):
    """Build lambda-s terms."""

    def sigma(self, term: typing.Any, i: lark.Token, arg: typing.Any) -> Sigma:
        return Sigma(term, _positive(i, str(i)), arg)

    def phi(self, k: lark.Token, i: lark.Token, term: typing.Any) -> Phi:
        return Phi(int(k), _positive(i, str(i)), term)


@lark.v_args(inline=True)
class _SigmaTransformer(_NamelessTransformer):
    """Build lambda-sigma expressions."""

    def one(self) -> One:
        return One()

    def closure(self, term: typing.Any, sub: typing.Any) -> SigClosure:
        return SigClosure(term, sub)

    def id(self) -> Id:
        return Id()

    def shift(self) -> SigShift:
        return SigShift()

    def dot(self, term: typing.Any, sub: typing.Any) -> Dot:
        return Dot(term, sub)

    def comp(self, left: typing.Any, right: typing.Any) -> Comp:
        return Comp(left, right)


def _positive(token: lark.Token, digits: str) -> int:
    value = int(digits)
    if value < 1:
        raise ParseError(f"Expected a positive integer, got {digits}", token.line, token.column)
    return value


named_grammar = Grammar(NAMED, _NamedTransformer(), "term")
de_bruijn_grammar = Grammar(DE_BRUIJN, _NamelessTransformer(), "term")
suspension_grammar = Grammar(SUSPENSION, _NamelessTransformer(), "expr")
simple_type_grammar = Grammar(SIMPLE_TYPE, _TypeTransformer(), "type")
signature_grammar = Grammar(SIGNATURE, _TypeTransformer(), "signature")
upsilon_grammar = Grammar(UPSILON, _UpsilonTransformer(), "term")
lambda_s_grammar = Grammar(LAMBDA_S, _LambdaSTransformer(), "term")
sigma_grammar = Grammar(SIGMA, _SigmaTransformer(), "expr")
