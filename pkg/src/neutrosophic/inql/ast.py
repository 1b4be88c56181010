"""Syntax trees for queries and conditions, with a canonical printer.

Positions are kept for diagnostics but excluded from equality so that
``parse(to_text(parse(s))) == parse(s)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ..nrdm.calculus import (
    Range, TAnd, TAttr, TBool, TCompare, TConst, TExists, TForall, TMember, TNot, TOr, TcQuery,
)


@dataclass(frozen=True)
class AttrRef:
    qualifier: str | None
    name: str
    pos: tuple = field(default=(0, 0), compare=False, repr=False)

    def __str__(self):
        return f"{self.qualifier}.{self.name}" if self.qualifier else self.name


@dataclass(frozen=True)
class Literal:
    value: object
    pos: tuple = field(default=(0, 0), compare=False, repr=False)

    def __str__(self):
        return quote(self.value)


Operand = Union[AttrRef, Literal]


@dataclass(frozen=True)
class RelRef:
    name: str
    alias: str | None = None
    pos: tuple = field(default=(0, 0), compare=False, repr=False)

    @property
    def label(self) -> str:
        return self.alias or self.name


@dataclass(frozen=True)
class BoolLit:
    value: bool


@dataclass(frozen=True)
class Compare:
    op: str
    left: Operand
    right: Operand


@dataclass(frozen=True)
class Not:
    arg: "Cond"


@dataclass(frozen=True)
class And:
    left: "Cond"
    right: "Cond"


@dataclass(frozen=True)
class Or:
    left: "Cond"
    right: "Cond"


@dataclass(frozen=True)
class Exists:
    query: "Query"


@dataclass(frozen=True)
class In:
    """``(a, b) in (subquery)`` or ``(a, b) in NAME``; ``source`` is a Query or a str."""

    operands: tuple
    source: Union["Query", str]
    pos: tuple = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Quantified:
    """``E op any (q)`` / ``E op all (q)``."""

    operand: Operand
    op: str
    kind: str
    query: "Query"
    pos: tuple = field(default=(0, 0), compare=False, repr=False)


Cond = Union[BoolLit, Compare, Not, And, Or, Exists, In, Quantified]


@dataclass(frozen=True)
class Select:
    attrs: tuple | None          # None means *
    rels: tuple
    where: Cond | None = None


@dataclass(frozen=True)
class Query:
    selects: tuple


@dataclass(frozen=True)
class Call:
    """Algebra expression ``fn(arg, ...)``; a bare relation name is a str."""

    fn: str
    args: tuple
    pos: tuple = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Assign:
    name: str
    expr: object


# -- printing --------------------------------------------------------------

def quote(v) -> str:
    if isinstance(v, str):
        return "'" + v.replace("'", "''") + "'"
    return repr(v)


_PREC = {Or: 1, And: 2, Not: 3}


def cond_text(c, parent: int = 0) -> str:
    prec = _PREC.get(type(c), 4)
    match c:
        case BoolLit(v):
            s = "true" if v else "false"
        case Compare(op, a, b):
            s = f"{a} {op} {b}"
        case Not(a):
            s = "not " + cond_text(a, 3)
        case And(a, b) | Or(a, b):
            word = "and" if isinstance(c, And) else "or"
            s = f"{cond_text(a, prec)} {word} {cond_text(b, prec + 1)}"
        case Exists(q):
            s = f"exists ({query_text(q)})"
        case In(ops, src):
            tup = str(ops[0]) if len(ops) == 1 else "(" + ", ".join(map(str, ops)) + ")"
            rhs = src if isinstance(src, str) else f"({query_text(src)})"
            s = f"{tup} in {rhs}"
        case Quantified(e, op, kind, q):
            s = f"{e} {op} {kind} ({query_text(q)})"
        case _:
            raise TypeError(f"not a condition: {c!r}")
    return f"({s})" if prec < parent else s


def select_text(s: Select) -> str:
    attrs = "*" if s.attrs is None else ", ".join(map(str, s.attrs))
    rels = ", ".join(r.name if r.alias is None else f"{r.name} {r.alias}" for r in s.rels)
    out = f"select {attrs} from {rels}"
    if s.where is not None:
        out += " where " + cond_text(s.where)
    return out


def query_text(q: Query) -> str:
    return " union ".join(select_text(s) for s in q.selects)


def expr_text(e) -> str:
    if isinstance(e, str):
        return e
    if isinstance(e, Query):
        return query_text(e)
    if isinstance(e, TcQuery):
        return tc_text(e)
    if isinstance(e, Assign):
        return f"{e.name} := {expr_text(e.expr)}"
    if isinstance(e, Call):
        parts = []
        for a in e.args:
            if isinstance(a, (Compare, Not, And, Or, BoolLit, Exists, In, Quantified)):
                parts.append(cond_text(a))
            else:
                parts.append(expr_text(a))
        return f"{e.fn}({', '.join(parts)})"
    raise TypeError(f"not an expression: {e!r}")


_TPREC = {TOr: 1, TAnd: 2, TNot: 3, TExists: 0, TForall: 0}


def tc_formula_text(f, parent: int = 0) -> str:
    prec = _TPREC.get(type(f), 4)
    match f:
        case TBool(v):
            s = "true" if v else "false"
        case TMember(var, rel):
            s = f"{var} in {rel}"
        case TCompare(op, a, b):
            s = f"{_toperand(a)} {op} {_toperand(b)}"
        case TNot(a):
            s = "not " + tc_formula_text(a, 3)
        case TAnd(a, b) | TOr(a, b):
            word = "and" if isinstance(f, TAnd) else "or"
            s = f"{tc_formula_text(a, prec)} {word} {tc_formula_text(b, prec + 1)}"
        case TExists(v, rng, body) | TForall(v, rng, body):
            word = "exists" if isinstance(f, TExists) else "forall"
            s = f"{word} {v} of {rng} : {tc_formula_text(body, 0)}"
            # a quantifier swallows everything to its right
            if parent > 0:
                return f"({s})"
        case _:
            raise TypeError(f"not a calculus formula: {f!r}")
    return f"({s})" if prec < parent else s


def _toperand(x) -> str:
    return f"{x.var}.{x.attr}" if isinstance(x, TAttr) else quote(x.value)


def tc_text(q: TcQuery) -> str:
    return f"{{ {q.var} of {q.range} | {tc_formula_text(q.formula)} }}"


__all__ = [
    "AttrRef", "Literal", "RelRef", "BoolLit", "Compare", "Not", "And", "Or", "Exists", "In",
    "Quantified", "Select", "Query", "Call", "Assign", "cond_text", "select_text", "query_text",
    "expr_text", "tc_text", "tc_formula_text", "quote",
    "Range", "TAnd", "TAttr", "TBool", "TCompare", "TConst", "TExists", "TForall", "TMember",
    "TNot", "TOr", "TcQuery",
]
