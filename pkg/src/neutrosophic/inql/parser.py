"""Recursive-descent parser for queries, algebra expressions and calculus queries.

Statement forms::

    select ... [union select ...]             SQL query
    { d of {I} | exists t of EVAL : ... }     tuple-calculus query
    join(split(R), split(S))                  algebra expression
    NAME := <any of the above>                assignment
"""
from __future__ import annotations

from ..errors import ParseError
from .ast import (
    And, Assign, AttrRef, BoolLit, Call, Compare, Exists, In, Literal, Not, Or, Quantified, Query,
    Range, RelRef, Select, TAnd, TAttr, TBool, TCompare, TConst, TExists, TForall, TMember, TNot,
    TOr, TcQuery,
)
from .lexer import Token, tokenize

CMP_OPS = ("=", "!=", "<", "<=", ">", ">=")

# fn name -> (number of relation args, trailing kind); kind: None, "attrs" or "cond"
ALGEBRA = {
    "union": (2, None),
    "intersect": (2, None),
    "diff": (2, None),
    "complement": (1, None),
    "join": (2, None),
    "product": (2, None),
    "project": (1, "attrs"),
    "select_guard": (1, "cond"),
    "split": (1, None),
    "combine": (1, None),
}


class Parser:
    def __init__(self, text: str, source: str | None = None, line0: int = 1):
        self.source = source
        self.toks: list[Token] = tokenize(text, source, line0)
        self.i = 0

    # -- token helpers -----------------------------------------------------
    def peek(self, k: int = 0) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def advance(self) -> Token:
        t = self.toks[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def error(self, msg: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.peek()
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        return ParseError(f"syntax error: {msg}, found {found}", tok.line, tok.col, self.source)

    def accept(self, kind: str, text: str | None = None) -> Token | None:
        if self.peek().is_(kind, text):
            return self.advance()
        return None

    def expect(self, kind: str, text: str | None = None, what: str | None = None) -> Token:
        tok = self.accept(kind, text)
        if tok is None:
            raise self.error(f"expected {what or repr(text) if text else what or kind}")
        return tok

    def ident(self, what: str = "identifier") -> Token:
        return self.expect("ident", what=what)

    def at_end(self):
        self.accept("op", ";")
        if self.peek().kind != "eof":
            raise self.error("expected end of statement")

    # -- SQL -----------------------------------------------------------------
    def query(self) -> Query:
        sels = [self.select()]
        while self.accept("kw", "union"):
            sels.append(self.select())
        return Query(tuple(sels))

    def select(self) -> Select:
        self.expect("kw", "select")
        if self.accept("op", "*"):
            attrs = None
        else:
            attrs = [self.attrref()]
            while self.accept("op", ","):
                attrs.append(self.attrref())
            attrs = tuple(attrs)
        self.expect("kw", "from")
        rels = [self.relref()]
        while self.accept("op", ","):
            rels.append(self.relref())
        where = self.cond() if self.accept("kw", "where") else None
        return Select(attrs, tuple(rels), where)

    def relref(self) -> RelRef:
        t = self.ident("relation name")
        alias = None
        if self.accept("kw", "as"):
            alias = self.ident("alias").text
        elif self.peek().kind == "ident":
            alias = self.advance().text
        return RelRef(t.text, alias, (t.line, t.col))

    def attrref(self) -> AttrRef:
        t = self.ident("attribute")
        if self.accept("op", "."):
            a = self.ident("attribute")
            return AttrRef(t.text, a.text, (t.line, t.col))
        return AttrRef(None, t.text, (t.line, t.col))

    def operand(self):
        t = self.peek()
        if t.kind in ("number", "string"):
            self.advance()
            return Literal(t.value, (t.line, t.col))
        if t.kind == "ident":
            return self.attrref()
        raise self.error("expected attribute or literal")

    def cond(self):
        c = self.and_cond()
        while self.accept("kw", "or"):
            c = Or(c, self.and_cond())
        return c

    def and_cond(self):
        c = self.not_cond()
        while self.accept("kw", "and"):
            c = And(c, self.not_cond())
        return c

    def not_cond(self):
        if self.accept("kw", "not"):
            return Not(self.not_cond())
        return self.primary_cond()

    def primary_cond(self):
        t = self.peek()
        if t.is_("kw", "true") or t.is_("kw", "false"):
            self.advance()
            return BoolLit(t.text == "true")
        if self.accept("kw", "exists"):
            self.expect("op", "(")
            q = self.query()
            self.expect("op", ")")
            return Exists(q)
        if t.is_("op", "("):
            tup = self._try_tuple()
            if tup is not None:
                return tup
            self.advance()
            c = self.cond()
            self.expect("op", ")")
            return c
        left = self.operand()
        if self.peek().is_("kw", "in"):
            return self.in_tail((left,), t)
        op = self.peek()
        if not (op.kind == "op" and op.text in CMP_OPS):
            raise self.error("expected comparison operator or 'in'")
        self.advance()
        kind = self.accept("kw", "any") or self.accept("kw", "all")
        if kind:
            self.expect("op", "(")
            q = self.query()
            self.expect("op", ")")
            return Quantified(left, op.text, kind.text, q, (t.line, t.col))
        return Compare(op.text, left, self.operand())

    def _try_tuple(self):
        """``(a, b, ...) in ...``; None (and no tokens consumed) if it is not that form."""
        start = self.i
        first = self.peek()
        try:
            self.expect("op", "(")
            ops = [self.operand()]
            while self.accept("op", ","):
                ops.append(self.operand())
            self.expect("op", ")")
        except ParseError:
            self.i = start
            return None
        if not self.peek().is_("kw", "in"):
            self.i = start
            return None
        return self.in_tail(tuple(ops), first)

    def in_tail(self, ops, first: Token):
        self.expect("kw", "in")
        if self.accept("op", "("):
            q = self.query()
            self.expect("op", ")")
            return In(ops, q, (first.line, first.col))
        return In(ops, self.ident("relation name or '('").text, (first.line, first.col))

    # -- algebra ---------------------------------------------------------------
    def expr(self):
        t = self.peek()
        if t.is_("kw", "select"):
            return self.query()
        if t.is_("op", "{"):
            return self.tc_query()
        if t.is_("kw", "union") and self.peek(1).is_("op", "("):
            # keyword doubling as the algebra function
            name = self.advance()
        else:
            name = self.ident("relation name, algebra function or query")
        if not self.peek().is_("op", "("):
            return name.text
        if name.text not in ALGEBRA:
            raise ParseError(f"unknown algebra function {name.text!r}; expected one of "
                             + ", ".join(sorted(ALGEBRA)), name.line, name.col, self.source)
        nrel, tail = ALGEBRA[name.text]
        self.expect("op", "(")
        args = [self.expr()]
        for _ in range(nrel - 1):
            self.expect("op", ",")
            args.append(self.expr())
        if tail == "attrs":
            self.expect("op", ",", "',' and attribute names")
            args.append(self.ident("attribute").text)
            while self.accept("op", ","):
                args.append(self.ident("attribute").text)
        elif tail == "cond":
            self.expect("op", ",", "',' and a condition")
            args.append(self.cond())
        self.expect("op", ")")
        return Call(name.text, tuple(args), (name.line, name.col))

    def statement(self):
        if self.peek().kind == "ident" and self.peek(1).is_("op", ":="):
            name = self.advance().text
            self.advance()
            return Assign(name, self.expr())
        return self.expr()

    # -- tuple calculus ----------------------------------------------------------
    def tc_query(self) -> TcQuery:
        self.expect("op", "{")
        var = self.ident("tuple variable").text
        self.expect("kw", "of")
        rng = self.tc_range()
        self.expect("op", "|")
        f = self.tc_formula()
        self.expect("op", "}")
        return TcQuery(var, rng, f)

    def tc_range(self) -> Range:
        if self.accept("op", "{"):
            attrs = [self.ident("attribute").text]
            while self.accept("op", ","):
                attrs.append(self.ident("attribute").text)
            self.expect("op", "}")
            return Range(attrs=tuple(attrs))
        return Range(relation=self.ident("relation name or '{'").text)

    def tc_formula(self):
        f = self.tc_and()
        while self.accept("kw", "or"):
            f = TOr(f, self.tc_and())
        return f

    def tc_and(self):
        f = self.tc_not()
        while self.accept("kw", "and"):
            f = TAnd(f, self.tc_not())
        return f

    def tc_not(self):
        if self.accept("kw", "not"):
            return TNot(self.tc_not())
        q = self.accept("kw", "exists") or self.accept("kw", "forall")
        if q:
            var = self.ident("tuple variable").text
            self.expect("kw", "of")
            rng = self.tc_range()
            if not (self.accept("op", ":") or self.accept("op", "|")):
                raise self.error("expected ':' after quantifier range")
            body = self.tc_formula()
            return (TExists if q.text == "exists" else TForall)(var, rng, body)
        return self.tc_atom()

    def tc_atom(self):
        t = self.peek()
        if self.accept("op", "("):
            f = self.tc_formula()
            self.expect("op", ")")
            return f
        if t.is_("kw", "true") or t.is_("kw", "false"):
            self.advance()
            return TBool(t.text == "true")
        if t.kind == "ident" and self.peek(1).is_("kw", "in"):
            self.advance()
            self.advance()
            return TMember(t.text, self.ident("relation name").text)
        left = self.tc_operand()
        op = self.peek()
        if not (op.kind == "op" and op.text in CMP_OPS):
            raise self.error("expected comparison operator or 'in'")
        self.advance()
        return TCompare(op.text, left, self.tc_operand())

    def tc_operand(self):
        t = self.peek()
        if t.kind in ("number", "string"):
            self.advance()
            return TConst(t.value)
        if t.kind == "ident":
            self.advance()
            if self.accept("op", "."):
                return TAttr(t.text, self.ident("attribute").text)
            return TConst(t.text)
        raise self.error("expected tuple attribute or constant")


def parse_query(text: str, source: str | None = None) -> Query:
    p = Parser(text, source)
    q = p.query()
    p.at_end()
    return q


def parse_condition(text: str, source: str | None = None):
    p = Parser(text, source)
    c = p.cond()
    p.at_end()
    return c


def parse_tc(text: str, source: str | None = None) -> TcQuery:
    p = Parser(text, source)
    q = p.tc_query()
    p.at_end()
    return q


def parse_statement(text: str, source: str | None = None, line0: int = 1):
    p = Parser(text, source, line0)
    s = p.statement()
    p.at_end()
    return s
