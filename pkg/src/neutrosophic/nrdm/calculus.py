"""Infinite-valued tuple relational calculus.

Formulas evaluate to a :class:`ConfidencePair`.  Tuple variables are bound
to a scheme through a :class:`Range`: either a named relation or an
explicit attribute set whose domains come from the database catalog.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Mapping, Union

from ..errors import EvaluationError, SchemeError
from .relation import ConfidencePair, NeutroRelation, Scheme

TRUE = ConfidencePair(1.0, 0.0)
FALSE = ConfidencePair(0.0, 1.0)

COMPARATORS = {
    "=": operator.eq,
    "!=": operator.ne,
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
}


@dataclass(frozen=True)
class Range:
    """``of R`` (relation name) or ``of {A, B}`` (attribute set)."""

    relation: str | None = None
    attrs: tuple | None = None

    def __str__(self):
        return self.relation if self.relation else "{" + ", ".join(self.attrs) + "}"


@dataclass(frozen=True)
class TAttr:
    var: str
    attr: str


@dataclass(frozen=True)
class TConst:
    value: object


@dataclass(frozen=True)
class TMember:
    var: str
    relation: str


@dataclass(frozen=True)
class TCompare:
    op: str
    left: Union[TAttr, TConst]
    right: Union[TAttr, TConst]


@dataclass(frozen=True)
class TBool:
    value: bool


@dataclass(frozen=True)
class TNot:
    arg: "CalcFormula"


@dataclass(frozen=True)
class TAnd:
    left: "CalcFormula"
    right: "CalcFormula"


@dataclass(frozen=True)
class TOr:
    left: "CalcFormula"
    right: "CalcFormula"


@dataclass(frozen=True)
class TExists:
    var: str
    range: Range
    body: "CalcFormula"


@dataclass(frozen=True)
class TForall:
    var: str
    range: Range
    body: "CalcFormula"


CalcFormula = Union[TMember, TCompare, TBool, TNot, TAnd, TOr, TExists, TForall]


@dataclass(frozen=True)
class TcQuery:
    """``{ var of range | formula }``."""

    var: str
    range: Range
    formula: CalcFormula


# -- pair connectives ------------------------------------------------------

def p_not(p: ConfidencePair) -> ConfidencePair:
    return ConfidencePair(p.doubt, p.belief)


def p_and(p: ConfidencePair, q: ConfidencePair) -> ConfidencePair:
    return ConfidencePair(min(p.belief, q.belief), max(p.doubt, q.doubt))


def p_or(p: ConfidencePair, q: ConfidencePair) -> ConfidencePair:
    return ConfidencePair(max(p.belief, q.belief), min(p.doubt, q.doubt))


def p_exists(values) -> ConfidencePair:
    """<max belief, min doubt>; <0,1> over an empty range."""
    vals = list(values)
    if not vals:
        return FALSE
    return ConfidencePair(max(v.belief for v in vals), min(v.doubt for v in vals))


def p_forall(values) -> ConfidencePair:
    """<min belief, max doubt>; <1,0> over an empty range."""
    vals = list(values)
    if not vals:
        return TRUE
    return ConfidencePair(min(v.belief for v in vals), max(v.doubt for v in vals))


def compare_values(op: str, a, b) -> bool:
    num = (int, float)
    if isinstance(a, num) and isinstance(b, num) and not isinstance(a, bool) and not isinstance(b, bool):
        return COMPARATORS[op](a, b)
    if type(a) is not type(b):
        raise EvaluationError(f"type mismatch: cannot compare {a!r} with {b!r}")
    return COMPARATORS[op](a, b)


# -- evaluation ------------------------------------------------------------

def resolve_range(rng: Range, db: Mapping[str, NeutroRelation], domain: str = "active"):
    """(scheme, candidate tuples) for a quantifier range."""
    if domain not in ("active", "full"):
        raise ValueError(f"domain must be 'active' or 'full', got {domain!r}")
    if rng.relation is not None:
        rel = _relation(db, rng.relation)
        tuples = list(rel.scheme.tau()) if domain == "full" else rel.stored()
        return rel.scheme, tuples
    scheme = scheme_for_attrs(rng.attrs, db)
    if domain == "full":
        return scheme, list(scheme.tau())
    seen: dict = {}
    for rel in db.values():
        if set(rel.scheme.attrs) == set(rng.attrs) and len(rel.scheme.attrs) == len(rng.attrs):
            proj = rel.scheme.projector(rng.attrs)
            for t in rel.stored():
                seen.setdefault(proj(t))
    return scheme, sorted(seen, key=scheme.sort_key)


def scheme_for_attrs(attrs, db: Mapping[str, NeutroRelation]) -> Scheme:
    doms, names = [], []
    for a in attrs:
        found = {}
        for rel in db.values():
            if a in rel.scheme.attrs:
                i = rel.scheme.index(a)
                found[rel.scheme.domains[i]] = rel.scheme.domain_names[i]
        if not found:
            raise EvaluationError(f"no relation declares attribute {a!r}")
        if len(found) > 1:
            raise SchemeError(f"attribute {a!r} has different domains in different relations")
        (d, n), = found.items()
        doms.append(d)
        names.append(n)
    return Scheme(tuple(attrs), tuple(doms), tuple(names))


def _relation(db, name) -> NeutroRelation:
    try:
        return db[name]
    except KeyError:
        raise EvaluationError(f"unknown relation {name!r}") from None


def _operand(x, env):
    if isinstance(x, TConst):
        return x.value
    try:
        scheme, t = env[x.var]
    except KeyError:
        raise EvaluationError(f"unbound tuple variable {x.var!r}") from None
    return t[scheme.index(x.attr)]


def tc_eval(f: CalcFormula, db: Mapping[str, NeutroRelation], env: Mapping | None = None,
            domain: str = "active") -> ConfidencePair:
    """Value of a calculus formula.  ``env`` maps variables to (scheme, tuple)."""
    env = dict(env or {})
    match f:
        case TBool(v):
            return TRUE if v else FALSE
        case TMember(var, name):
            rel = _relation(db, name)
            try:
                scheme, t = env[var]
            except KeyError:
                raise EvaluationError(f"unbound tuple variable {var!r}") from None
            if set(scheme.attrs) != set(rel.scheme.attrs):
                raise SchemeError(f"{var} of {scheme} cannot be a member of {name}{rel.scheme}")
            return rel.get(tuple(t[scheme.index(a)] for a in rel.scheme.attrs))
        case TCompare(op, a, b):
            return TRUE if compare_values(op, _operand(a, env), _operand(b, env)) else FALSE
        case TNot(a):
            return p_not(tc_eval(a, db, env, domain))
        case TAnd(a, b):
            return p_and(tc_eval(a, db, env, domain), tc_eval(b, db, env, domain))
        case TOr(a, b):
            return p_or(tc_eval(a, db, env, domain), tc_eval(b, db, env, domain))
        case TExists(var, rng, body) | TForall(var, rng, body):
            scheme, tuples = resolve_range(rng, db, domain)
            vals = (tc_eval(body, db, {**env, var: (scheme, t)}, domain) for t in tuples)
            return p_exists(vals) if isinstance(f, TExists) else p_forall(vals)
    raise EvaluationError(f"not a calculus formula: {f!r}")


def tc_query(q: TcQuery, db: Mapping[str, NeutroRelation], domain: str = "active") -> NeutroRelation:
    """Materialise ``{t of range | P(t)}`` over every tuple of the range's scheme.

    Quantifiers inside ``P`` follow ``domain``; result rows equal to <0,0>
    are dropped.
    """
    scheme, _ = resolve_range(q.range, db, "active")
    rows = {}
    for t in scheme.tau():
        v = tc_eval(q.formula, db, {q.var: (scheme, t)}, domain)
        if v.pair != (0.0, 0.0):
            rows[t] = v
    return NeutroRelation(scheme, rows)
