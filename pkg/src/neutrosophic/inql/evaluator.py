"""Infinite-valued evaluation of SELECT queries, algebra expressions and calculus queries.

A SELECT evaluates as projection of the selection of the product of its
FROM relations:  sigma(t) = <min(b, t_C), max(d, f_C)>, then per output
tuple <max belief, min doubt>.  ``domain`` decides which rows are
enumerated: stored rows only (``"active"``) or every tuple over the declared
domains (``"full"``, absent tuples read as <0,0>).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from ..errors import EvaluationError, SchemeError
from ..nrdm import algebra as alg
from ..nrdm.calculus import FALSE, TRUE, compare_values, p_and, p_not, p_or, tc_query
from ..nrdm.relation import (
    ABSENT, EPS, MAX_ENUMERATION, ConfidencePair, MultiRelation, NeutroRelation, Scheme, combine,
    split,
)
from .ast import (
    And, Assign, AttrRef, BoolLit, Call, Compare, Exists, In, Literal, Not, Or, Quantified, Query,
    Select, TcQuery, cond_text, select_text,
)


def _where(pos) -> str:
    return f" (line {pos[0]}, column {pos[1]})" if pos and pos[0] else ""


def adjusted_doubt(p: ConfidencePair) -> float:
    """Doubt, or 1 - belief when the pair is inconsistent."""
    return 1.0 - p.belief if p.belief + p.doubt > 1.0 else p.doubt


class Scope:
    """Column bindings of one FROM row, chained to the enclosing query's row."""

    def __init__(self, columns: list, row: tuple, parent: "Scope | None" = None):
        self.columns = columns      # [(label, attr)]
        self.row = row
        self.parent = parent

    def lookup(self, ref: AttrRef):
        hits = [i for i, (lab, a) in enumerate(self.columns)
                if a == ref.name and (ref.qualifier is None or lab == ref.qualifier)]
        if len(hits) > 1:
            raise EvaluationError(f"ambiguous attribute reference {ref}{_where(ref.pos)}; qualify it")
        if hits:
            return True, self.row[hits[0]]
        if self.parent is not None:
            return self.parent.lookup(ref)
        return False, None


@dataclass
class SelectTrace:
    """Intermediate tables of one SELECT, for ``\\explain``."""

    text: str
    columns: list
    sigma: list = field(default_factory=list)      # (row, product value, condition, selected)
    result: NeutroRelation | None = None

    def describe(self) -> str:
        head = ", ".join(f"{l}.{a}" for l, a in self.columns)
        lines = [f"-- {self.text}", f"sigma table over ({head}): value, condition -> selected"]
        for row, val, c, s in self.sigma:
            cells = ", ".join(map(str, row))
            lines.append(f"  ({cells})  {val}  {c} -> {s}")
        lines.append("pi table:")
        for t in self.result.stored():
            lines.append(f"  ({', '.join(map(str, t))})  {self.result[t]}")
        return "\n".join(lines)


class Evaluator:
    def __init__(self, db, domain: str | None = None, algebra_domain: str | None = None,
                 trace: bool = False):
        cfg = getattr(db, "config", None)
        self.db = db
        self.domain = domain or (cfg.quantifier_range if cfg else "active")
        self.algebra_domain = algebra_domain or (cfg.algebra_range if cfg else "full")
        if self.domain not in ("active", "full") or self.algebra_domain not in ("active", "full"):
            raise ValueError("range mode must be 'active' or 'full'")
        self.traces: list[SelectTrace] | None = [] if trace else None

    # -- relations ---------------------------------------------------------
    def relation(self, name: str) -> NeutroRelation:
        try:
            return self.db[name]
        except KeyError:
            raise EvaluationError(f"unknown relation {name!r}") from None

    def _range(self, rel: NeutroRelation) -> list:
        return list(rel.scheme.tau()) if self.domain == "full" else rel.stored()

    # -- queries -------------------------------------------------------------
    def query(self, q: Query, outer: Scope | None = None) -> NeutroRelation:
        out = self.select(q.selects[0], outer)
        for s in q.selects[1:]:
            nxt = self.select(s, outer)
            if nxt.scheme != out.scheme:
                raise SchemeError(f"union of queries with different schemes: {out.scheme} vs {nxt.scheme}")
            out = alg.n_union(out, nxt)
        return out

    def select(self, s: Select, outer: Scope | None = None) -> NeutroRelation:
        rels, labels = [], set()
        for ref in s.rels:
            if ref.label in labels:
                raise EvaluationError(f"relation label {ref.label!r} used twice{_where(ref.pos)}")
            labels.add(ref.label)
            try:
                rels.append((ref.label, self.db[ref.name]))
            except KeyError:
                raise EvaluationError(f"unknown relation {ref.name!r}{_where(ref.pos)}") from None
        columns = [(lab, a) for lab, r in rels for a in r.scheme.attrs]
        doms = [d for _, r in rels for d in r.scheme.domains]
        dnames = [d for _, r in rels for d in r.scheme.domain_names]

        # select list -> column positions (local scope only)
        if s.attrs is None:
            picks = list(range(len(columns)))
        else:
            picks = []
            for ref in s.attrs:
                hits = [i for i, (lab, a) in enumerate(columns)
                        if a == ref.name and (ref.qualifier is None or lab == ref.qualifier)]
                if not hits:
                    raise EvaluationError(f"unknown attribute {ref}{_where(ref.pos)}")
                if len(hits) > 1:
                    raise EvaluationError(f"ambiguous attribute reference {ref}{_where(ref.pos)}; qualify it")
                picks.append(hits[0])
        if len(set(picks)) != len(picks):
            raise EvaluationError("an attribute is selected twice")
        bare = [columns[i][1] for i in picks]
        names = tuple(b if bare.count(b) == 1 else f"{columns[i][0]}.{b}" for i, b in zip(picks, bare))
        out_scheme = Scheme(names, tuple(doms[i] for i in picks), tuple(dnames[i] for i in picks))

        if self.domain == "full":
            size = math.prod(r.scheme.size() for _, r in rels)
            if size > MAX_ENUMERATION:
                raise EvaluationError(f"domain guard: product of {len(rels)} relations has {size} tuples")
            ranges = [list(r.scheme.tau()) for _, r in rels]
        else:
            # stored rows with information; <0,0> rows are dropped by the product anyway
            ranges = [[t for t in r.stored() if r[t].pair != ABSENT.pair] for _, r in rels]

        trace = SelectTrace(select_text(s), columns) if self.traces is not None else None
        acc: dict = {}
        for combo in itertools.product(*ranges):
            pairs = [r.get(t) for (_, r), t in zip(rels, combo)]
            val = ConfidencePair(min(p.belief for p in pairs), max(p.doubt for p in pairs))
            row = tuple(v for t in combo for v in t)
            c = TRUE if s.where is None else self.cond(s.where, Scope(columns, row, outer))
            sel = ConfidencePair(min(val.belief, c.belief), max(val.doubt, c.doubt))
            if trace is not None:
                trace.sigma.append((row, val, c, sel))
            key = tuple(row[i] for i in picks)
            prev = acc.get(key)
            acc[key] = sel.pair if prev is None else (max(prev[0], sel.belief), min(prev[1], sel.doubt))
        result = NeutroRelation(out_scheme, {k: v for k, v in acc.items() if v != ABSENT.pair})
        if trace is not None:
            trace.result = result
            self.traces.append(trace)
        return result

    # -- conditions ------------------------------------------------------------
    def operand(self, x, scope: Scope | None):
        if isinstance(x, Literal):
            return x.value
        if scope is not None:
            found, v = scope.lookup(x)
            if found:
                return v
        if x.qualifier is None and self._is_constant(x.name):
            return x.name
        raise EvaluationError(f"unknown attribute {x}{_where(x.pos)}")

    def _is_constant(self, name) -> bool:
        check = getattr(self.db, "is_constant", None)
        if check is not None:
            return check(name)
        return any(name in d for r in self.db.values() for d in r.scheme.domains)

    def cond(self, c, scope: Scope | None = None) -> ConfidencePair:
        match c:
            case BoolLit(v):
                return TRUE if v else FALSE
            case Compare(op, a, b):
                try:
                    return TRUE if self._compare(op, self.operand(a, scope), self.operand(b, scope)) else FALSE
                except EvaluationError as e:
                    if "(line " in str(e):
                        raise
                    raise EvaluationError(f"{e}{_where(a.pos)}") from None
            case Not(a):
                return p_not(self.cond(a, scope))
            case And(a, b):
                return p_and(self.cond(a, scope), self.cond(b, scope))
            case Or(a, b):
                return p_or(self.cond(a, scope), self.cond(b, scope))
            case Exists(q):
                r = self.query(q, scope)
                pairs = [r.get(t) for t in self._range(r)]
                if not pairs:
                    return FALSE
                return ConfidencePair(max(p.belief for p in pairs), min(adjusted_doubt(p) for p in pairs))
            case In(ops, src):
                r = self.relation(src) if isinstance(src, str) else self.query(src, scope)
                t = tuple(self.operand(o, scope) for o in ops)
                if len(t) != len(r.scheme):
                    raise EvaluationError(
                        f"'in' compares a {len(t)}-tuple with a relation of arity {len(r.scheme)}{_where(c.pos)}")
                return r.get(t) if r.scheme.conforms(t) else ABSENT
            case Quantified():
                return self._quantified(c, scope)
        raise EvaluationError(f"not a condition: {c!r}")

    def _compare(self, op, a, b) -> bool:
        return compare_values(op, a, b)

    def _quantified(self, c: Quantified, scope) -> ConfidencePair:
        r = self.query(c.query, scope)
        if len(r.scheme) != 1:
            raise EvaluationError(
                f"'{c.op} {c.kind}' needs a single-attribute subquery, got {r.scheme}{_where(c.pos)}")
        e = self.operand(c.operand, scope)
        ks = self._range(r)
        if c.kind == "any":
            hits = [r.get(k) for k in ks if self._compare(c.op, e, k[0])]
            if not hits:
                return FALSE
            out = ConfidencePair(max(p.belief for p in hits), min(adjusted_doubt(p) for p in hits))
        else:
            misses = [r.get(k) for k in ks if not self._compare(c.op, e, k[0])]
            if not misses:
                return TRUE
            out = ConfidencePair(min(adjusted_doubt(p) for p in misses), max(p.belief for p in misses))
        assert out.belief + out.doubt <= 1.0 + EPS, f"{c.kind} condition produced {out}"
        return out

    def guard(self, c):
        """2-valued tuple predicate for select_guard."""

        def pred(row: dict) -> bool:
            scope = Scope([(None, a) for a in row], tuple(row.values()))
            v = self.cond(c, scope)
            if v.pair == TRUE.pair:
                return True
            if v.pair == FALSE.pair:
                return False
            raise EvaluationError(f"select_guard needs a 2-valued condition; {cond_text(c)} gave {v}")

        return pred

    # -- algebra / statements ----------------------------------------------------
    def expr(self, e):
        if isinstance(e, str):
            return self.relation(e)
        if isinstance(e, Query):
            return self.query(e)
        if isinstance(e, TcQuery):
            return tc_query(e, self.db, self.domain)
        if isinstance(e, Call):
            return self.call(e)
        raise EvaluationError(f"cannot evaluate {e!r}")

    def call(self, e: Call):
        fn, args = e.fn, e.args
        dom = self.algebra_domain
        if fn in ("union", "intersect", "diff", "join", "product"):
            a, b = self.expr(args[0]), self.expr(args[1])
            if fn == "union":
                return alg.n_union(a, b)
            if fn == "intersect":
                return alg.n_intersect(a, b)
            if fn == "diff":
                return alg.n_difference(a, b)
            if fn == "join":
                return alg.n_join(a, b, dom)
            return alg.n_product(a, b, dom)
        a = self.expr(args[0])
        if fn == "complement":
            return alg.n_complement(a)
        if fn == "project":
            return alg.n_project(a, args[1:], dom)
        if fn == "select_guard":
            return alg.n_select_guard(a, self.guard(args[1]), dom)
        if fn == "split":
            if isinstance(a, MultiRelation):
                return a
            return split(a)
        if fn == "combine":
            return combine(a)
        raise EvaluationError(f"unknown algebra function {fn!r}")

    def statement(self, s):
        if isinstance(s, Assign):
            return s.name, self.expr(s.expr)
        return None, self.expr(s)


def eval_condition(c, row: dict | None, db, domain: str | None = None) -> ConfidencePair:
    """Condition value for a row given as attribute -> value (may be empty)."""
    ev = Evaluator(db, domain)
    scope = Scope([(None, a) for a in row], tuple(row.values())) if row else None
    return ev.cond(c, scope)


def eval_select(q, db, domain: str | None = None) -> NeutroRelation:
    ev = Evaluator(db, domain)
    return ev.query(q) if isinstance(q, Query) else ev.select(q)


def eval_union_query(q1, q2, db, domain: str | None = None) -> NeutroRelation:
    """``q1 union q2``: per tuple <max belief, min doubt>."""
    ev = Evaluator(db, domain)
    r1, r2 = eval_select(q1, db, ev.domain), eval_select(q2, db, ev.domain)
    if r1.scheme != r2.scheme:
        raise SchemeError(f"union of queries with different schemes: {r1.scheme} vs {r2.scheme}")
    return alg.n_union(r1, r2)
