"""Interval neutrosophic propositional and first-order predicate logic.

Formulas are written as S-expressions::

    (and p (not q))
    (implies p q)          ; also (-> p q)
    (iff p q)              ; also (<-> p q), sugar for (and (-> p q) (-> q p))
    (forall x (p x))
    (exists y (r (f y) c))

A bare symbol in formula position is a propositional variable (or a
0-ary predicate when evaluated against a :class:`FiniteModel`).
"""
from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from typing import Mapping, Union

from .errors import DomainError, EvaluationError, ParseError
from .ins import InsTriple
from .interval import UnitInterval, iv_add, iv_max, iv_min, iv_one_minus, iv_sub


# -- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Sym:
    """A term symbol: a bound variable or a model constant."""
    name: str


@dataclass(frozen=True)
class Fn:
    name: str
    args: tuple


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


Formula = Union[Var, Const, Not, And, Or, Implies, Iff, Atom, Forall, Exists]
Term = Union[Sym, Fn]

_BINARY = {"and": And, "or": Or, "implies": Implies, "->": Implies, "iff": Iff, "<->": Iff}
_QUANT = {"forall": Forall, "exists": Exists}
_CONSTS = {"true": True, "false": False}
_RESERVED = set(_BINARY) | set(_QUANT) | set(_CONSTS) | {"not"}


# -- S-expression reader ---------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(;[^\n]*)|(\()|(\))|([^\s()]+))")


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        pos = m.end()
        if m.group(1):
            continue
        tok = m.group(2) or m.group(3) or m.group(4)
        yield tok, m.start(m.lastindex) + 1


def _read(text: str):
    """Nested lists of (symbol, column) leaves."""
    stack = [[]]
    opened = []
    for tok, col in _tokens(text):
        if tok == "(":
            stack.append([])
            opened.append(col)
        elif tok == ")":
            if len(stack) == 1:
                raise ParseError("unexpected ')'", line=1, col=col)
            done = stack.pop()
            opened.pop()
            stack[-1].append((done, col))
        else:
            stack[-1].append((tok, col))
    if len(stack) != 1:
        raise ParseError("unclosed '('", line=1, col=opened[-1])
    if len(stack[0]) != 1:
        if not stack[0]:
            raise ParseError("empty formula", line=1, col=1)
        raise ParseError("trailing input after formula", line=1, col=stack[0][1][1])
    return stack[0][0]


def parse_formula(text: str) -> Formula:
    """Parse an S-expression formula."""
    return _formula(_read(text))


def _formula(node) -> Formula:
    val, col = node
    if isinstance(val, str):
        if val in _CONSTS:
            return Const(_CONSTS[val])
        if val in _RESERVED:
            raise ParseError(f"'{val}' needs arguments", line=1, col=col)
        return Var(val)
    if not val:
        raise ParseError("empty list", line=1, col=col)
    head, hcol = val[0]
    args = val[1:]
    if not isinstance(head, str):
        raise ParseError("operator expected", line=1, col=hcol)
    if head == "not":
        if len(args) != 1:
            raise ParseError("'not' takes one argument", line=1, col=hcol)
        return Not(_formula(args[0]))
    if head in _BINARY:
        cls = _BINARY[head]
        if cls in (And, Or):
            if len(args) < 2:
                raise ParseError(f"'{head}' takes at least two arguments", line=1, col=hcol)
            out = _formula(args[0])
            for a in args[1:]:
                out = cls(out, _formula(a))
            return out
        if len(args) != 2:
            raise ParseError(f"'{head}' takes two arguments", line=1, col=hcol)
        return cls(_formula(args[0]), _formula(args[1]))
    if head in _QUANT:
        if len(args) != 2 or not isinstance(args[0][0], str):
            raise ParseError(f"'{head}' expects a variable and a body", line=1, col=hcol)
        return _QUANT[head](args[0][0], _formula(args[1]))
    if head in _CONSTS:
        raise ParseError(f"'{head}' is a constant, not a predicate", line=1, col=hcol)
    return Atom(head, tuple(_term(a) for a in args))


def _term(node) -> Term:
    val, col = node
    if isinstance(val, str):
        return Sym(val)
    if not val or not isinstance(val[0][0], str):
        raise ParseError("function application expected", line=1, col=col)
    return Fn(val[0][0], tuple(_term(a) for a in val[1:]))


def to_sexpr(f) -> str:
    """Inverse of :func:`parse_formula` (n-ary and/or come back as nested binaries)."""
    match f:
        case Var(name):
            return name
        case Const(v):
            return "true" if v else "false"
        case Not(a):
            return f"(not {to_sexpr(a)})"
        case And(a, b):
            return f"(and {to_sexpr(a)} {to_sexpr(b)})"
        case Or(a, b):
            return f"(or {to_sexpr(a)} {to_sexpr(b)})"
        case Implies(a, b):
            return f"(implies {to_sexpr(a)} {to_sexpr(b)})"
        case Iff(a, b):
            return f"(iff {to_sexpr(a)} {to_sexpr(b)})"
        case Forall(v, b):
            return f"(forall {v} {to_sexpr(b)})"
        case Exists(v, b):
            return f"(exists {v} {to_sexpr(b)})"
        case Atom(p, args):
            return f"({p}{''.join(' ' + to_sexpr(a) for a in args)})"
        case Sym(name):
            return name
        case Fn(name, args):
            return f"({name}{''.join(' ' + to_sexpr(a) for a in args)})"
    raise TypeError(f"not a formula: {f!r}")


def variables(f) -> list[str]:
    """Propositional variables in first-occurrence order."""
    seen: dict[str, None] = {}

    def walk(g):
        match g:
            case Var(name):
                seen.setdefault(name)
            case Not(a) | Forall(_, a) | Exists(_, a):
                walk(a)
            case And(a, b) | Or(a, b) | Implies(a, b) | Iff(a, b):
                walk(a)
                walk(b)

    walk(f)
    return list(seen)


def predicate_arities(f) -> dict[str, int]:
    """Predicate symbols with their arity; bare symbols count as arity 0."""
    out: dict[str, int] = {}

    def put(name, n):
        if out.setdefault(name, n) != n:
            raise EvaluationError(f"predicate {name} used with arities {out[name]} and {n}")

    def walk(g):
        match g:
            case Var(name):
                put(name, 0)
            case Atom(p, args):
                put(p, len(args))
            case Not(a) | Forall(_, a) | Exists(_, a):
                walk(a)
            case And(a, b) | Or(a, b) | Implies(a, b) | Iff(a, b):
                walk(a)
                walk(b)

    walk(f)
    return out


# -- connective semantics --------------------------------------------------

def neg(p: InsTriple) -> InsTriple:
    return InsTriple(p.f, iv_one_minus(p.i), p.t)


def conj(p: InsTriple, q: InsTriple) -> InsTriple:
    return InsTriple(iv_min(p.t, q.t), iv_max(p.i, q.i), iv_max(p.f, q.f))


def disj(p: InsTriple, q: InsTriple) -> InsTriple:
    return InsTriple(iv_max(p.t, q.t), iv_min(p.i, q.i), iv_min(p.f, q.f))


def impl(p: InsTriple, q: InsTriple) -> InsTriple:
    """<min(1, 1 - t(p) + t(q)), max(0, i(q) - i(p)), max(0, f(q) - f(p))>."""
    return InsTriple(iv_add(iv_one_minus(p.t), q.t), iv_sub(q.i, p.i), iv_sub(q.f, p.f))


def equiv(p: InsTriple, q: InsTriple) -> InsTriple:
    return conj(impl(p, q), impl(q, p))


def forall_of(values) -> InsTriple:
    """<min t, min i, max f> over a non-empty collection."""
    vals = list(values)
    return InsTriple(
        UnitInterval(min(v.t.inf for v in vals), min(v.t.sup for v in vals)),
        UnitInterval(min(v.i.inf for v in vals), min(v.i.sup for v in vals)),
        UnitInterval(max(v.f.inf for v in vals), max(v.f.sup for v in vals)),
    )


def exists_of(values) -> InsTriple:
    """<max t, max i, min f> over a non-empty collection."""
    vals = list(values)
    return InsTriple(
        UnitInterval(max(v.t.inf for v in vals), max(v.t.sup for v in vals)),
        UnitInterval(max(v.i.inf for v in vals), max(v.i.sup for v in vals)),
        UnitInterval(min(v.f.inf for v in vals), min(v.f.sup for v in vals)),
    )


@dataclass(frozen=True)
class DesignatedConvention:
    """The values that the constants true/false denote and that tautologies must reach."""

    name: str
    truth: InsTriple
    falsity: InsTriple

    def __post_init__(self):
        if self.truth == self.falsity:
            raise DomainError("designated truth and falsity must differ")


PROPOSITIONAL = DesignatedConvention("propositional", InsTriple.of(1, 0, 0), InsTriple.of(0, 1, 1))
PREDICATE = DesignatedConvention("predicate", InsTriple.of(1, 1, 0), InsTriple.of(0, 0, 1))

Interpretation = Mapping[str, InsTriple]


def eval_prop(f: Formula, m: Interpretation, convention: DesignatedConvention = PROPOSITIONAL) -> InsTriple:
    """Value of a propositional formula under an interpretation."""
    match f:
        case Var(name):
            try:
                return m[name]
            except KeyError:
                raise EvaluationError(f"unbound variable {name!r}") from None
        case Const(v):
            return convention.truth if v else convention.falsity
        case Not(a):
            return neg(eval_prop(a, m, convention))
        case And(a, b):
            return conj(eval_prop(a, m, convention), eval_prop(b, m, convention))
        case Or(a, b):
            return disj(eval_prop(a, m, convention), eval_prop(b, m, convention))
        case Implies(a, b):
            return impl(eval_prop(a, m, convention), eval_prop(b, m, convention))
        case Iff(a, b):
            return equiv(eval_prop(a, m, convention), eval_prop(b, m, convention))
    raise EvaluationError(f"not a propositional formula: {to_sexpr(f)}")


# -- falsification-based checking ------------------------------------------

CORNERS = (
    InsTriple.of(1, 0, 0),
    InsTriple.of(0, 1, 1),
    InsTriple.of(0.5, 0.5, 0.5),
)
_GRID = 256  # random grades are multiples of 1/256 so 1 - x is exact
_MAX_CORNER_COMBOS = 729


@dataclass(frozen=True)
class Verdict:
    """Outcome of a falsification search.  ``holds`` never means "proved"."""

    holds: bool
    samples: int
    convention: DesignatedConvention
    sampling: str
    counterexample: dict | None = None
    value: InsTriple | None = None
    other_value: InsTriple | None = None

    @property
    def falsified(self) -> bool:
        return not self.holds

    def __str__(self):
        if self.holds:
            return f"no counterexample found in {self.samples} interpretations ({self.sampling}, {self.convention.name})"
        ce = ", ".join(f"{k}={v}" for k, v in self.counterexample.items())
        return f"falsified at {ce}: value {self.value}"


def random_interval(rng: random.Random, degenerate: bool = False) -> UnitInterval:
    a = rng.randint(0, _GRID) / _GRID
    if degenerate:
        return UnitInterval(a, a)
    b = rng.randint(0, _GRID) / _GRID
    return UnitInterval(min(a, b), max(a, b))


def random_triple(rng: random.Random, degenerate: bool = False) -> InsTriple:
    return InsTriple(random_interval(rng, degenerate), random_interval(rng, degenerate), random_interval(rng, degenerate))


def _interpretations(names, samples, seed, sampling):
    if sampling not in ("degenerate", "interval"):
        raise ValueError(f"sampling must be 'degenerate' or 'interval', got {sampling!r}")
    if len(CORNERS) ** len(names) <= _MAX_CORNER_COMBOS:
        for combo in itertools.product(CORNERS, repeat=len(names)):
            yield dict(zip(names, combo))
    else:
        for c in CORNERS:
            yield {n: c for n in names}
    rng = random.Random(seed)
    for _ in range(samples):
        yield {n: random_triple(rng, sampling == "degenerate") for n in names}


def check_tautology(f: Formula, convention: DesignatedConvention = PROPOSITIONAL, samples: int = 1000,
                    seed: int = 0, sampling: str = "degenerate") -> Verdict:
    """Search for an interpretation where ``f`` is not the designated truth.

    The degenerate corners are swept first, then ``samples`` seeded random
    interpretations.  ``sampling="interval"`` draws proper intervals instead
    of points.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    names = variables(f)
    n = 0
    for m in _interpretations(names, samples, seed, sampling):
        n += 1
        v = eval_prop(f, m, convention)
        if v != convention.truth:
            return Verdict(False, n, convention, sampling, dict(m), v)
    return Verdict(True, n, convention, sampling)


def check_equivalence(f: Formula, g: Formula, samples: int = 1000, seed: int = 0,
                      sampling: str = "degenerate",
                      convention: DesignatedConvention = PROPOSITIONAL) -> Verdict:
    """Search for an interpretation where ``f`` and ``g`` take different values."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    names = list(dict.fromkeys(variables(f) + variables(g)))
    n = 0
    for m in _interpretations(names, samples, seed, sampling):
        n += 1
        a, b = eval_prop(f, m, convention), eval_prop(g, m, convention)
        if a != b:
            return Verdict(False, n, convention, sampling, dict(m), a, b)
    return Verdict(True, n, convention, sampling)


# -- first-order models ----------------------------------------------------

@dataclass(frozen=True)
class FiniteModel:
    """Finite domain with total predicate and function tables."""

    domain: tuple
    predicates: Mapping[str, Mapping[tuple, InsTriple]]
    constants: Mapping[str, object] = field(default_factory=dict)
    functions: Mapping[str, Mapping[tuple, object]] = field(default_factory=dict)

    def __post_init__(self):
        dom = tuple(self.domain)
        object.__setattr__(self, "domain", dom)
        if not dom:
            raise DomainError("model domain must be non-empty")
        dset = set(dom)
        for kind, tables in (("predicate", self.predicates), ("function", self.functions)):
            for name, table in tables.items():
                arities = {len(k) for k in table}
                if len(arities) != 1:
                    raise DomainError(f"{kind} {name} has rows of mixed arity")
                n = arities.pop()
                want = set(itertools.product(dom, repeat=n))
                if set(table) != want:
                    raise DomainError(f"{kind} {name} is not total over the domain")
                if kind == "function" and not set(table.values()) <= dset:
                    raise DomainError(f"function {name} maps outside the domain")
        for c, v in self.constants.items():
            if v not in dset:
                raise DomainError(f"constant {c} denotes {v!r}, not a domain element")

    def arity(self, pred: str) -> int:
        table = self.predicates[pred]
        return len(next(iter(table)))

    @classmethod
    def from_text(cls, text: str) -> "FiniteModel":
        """Parse a model file.

        ::

            domain: 1, 2, 3
            const a = 1
            func f(1) = 2
            pred p(1) = <[0.5,0.5],[1,1],[0.4,0.4]>
            pred r() = <0.2,0.3,0.9>
        """
        domain = None
        preds: dict = {}
        funcs: dict = {}
        consts: dict = {}
        row = re.compile(r"(pred|func)\s+(\w+)\s*\(([^)]*)\)\s*=\s*(.+)")
        for n, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                if line.startswith("domain:"):
                    domain = tuple(x.strip() for x in line[7:].split(",") if x.strip())
                elif line.startswith("const "):
                    name, _, val = line[6:].partition("=")
                    consts[name.strip()] = val.strip()
                elif m := row.fullmatch(line):
                    kind, name, args, val = m.groups()
                    key = tuple(a.strip() for a in args.split(",") if a.strip())
                    if kind == "pred":
                        preds.setdefault(name, {})[key] = InsTriple.parse(val)
                    else:
                        funcs.setdefault(name, {})[key] = val.strip()
                else:
                    raise ParseError("unrecognised line")
            except (ParseError, DomainError) as exc:
                raise ParseError(getattr(exc, "message", str(exc)), line=n) from None
        if domain is None:
            raise ParseError("model file lacks a 'domain:' line")
        return cls(domain, preds, consts, funcs)


def _eval_term(t: Term, model: FiniteModel, env: Mapping[str, object]):
    match t:
        case Sym(name):
            if name in env:
                return env[name]
            if name in model.constants:
                return model.constants[name]
            raise EvaluationError(f"unbound variable or constant {name!r}")
        case Fn(name, args):
            table = model.functions.get(name)
            if table is None:
                raise EvaluationError(f"unknown function {name!r}")
            key = tuple(_eval_term(a, model, env) for a in args)
            if key not in table:
                raise EvaluationError(f"function {name} applied to {len(key)} arguments, arity mismatch")
            return table[key]
    raise EvaluationError(f"not a term: {t!r}")


def _lookup(model: FiniteModel, pred: str, key: tuple) -> InsTriple:
    table = model.predicates.get(pred)
    if table is None:
        raise EvaluationError(f"unknown predicate {pred!r}")
    if model.arity(pred) != len(key):
        raise EvaluationError(f"predicate {pred} has arity {model.arity(pred)}, used with {len(key)}")
    return table[key]


def eval_pred(f: Formula, model: FiniteModel, env: Mapping[str, object] | None = None,
              convention: DesignatedConvention = PREDICATE) -> InsTriple:
    """Value of a first-order formula in a finite model."""
    env = dict(env or {})
    match f:
        case Var(name):
            return _lookup(model, name, ())
        case Atom(p, args):
            return _lookup(model, p, tuple(_eval_term(a, model, env) for a in args))
        case Const(v):
            return convention.truth if v else convention.falsity
        case Not(a):
            return neg(eval_pred(a, model, env, convention))
        case And(a, b):
            return conj(eval_pred(a, model, env, convention), eval_pred(b, model, env, convention))
        case Or(a, b):
            return disj(eval_pred(a, model, env, convention), eval_pred(b, model, env, convention))
        case Implies(a, b):
            return impl(eval_pred(a, model, env, convention), eval_pred(b, model, env, convention))
        case Iff(a, b):
            return equiv(eval_pred(a, model, env, convention), eval_pred(b, model, env, convention))
        case Forall(v, body):
            return forall_of(eval_pred(body, model, {**env, v: d}, convention) for d in model.domain)
        case Exists(v, body):
            return exists_of(eval_pred(body, model, {**env, v: d}, convention) for d in model.domain)
    raise EvaluationError(f"cannot evaluate {f!r}")


def ground(f: Formula, model: FiniteModel, env: Mapping[str, object] | None = None):
    """Rewrite a quantifier-free formula into a propositional one.

    Returns ``(prop_formula, interpretation)`` where each ground atom became
    a variable named like ``p(1,2)``.
    """
    env = dict(env or {})
    interp: dict[str, InsTriple] = {}

    def go(g):
        match g:
            case Var(name):
                interp[name] = _lookup(model, name, ())
                return g
            case Atom(p, args):
                key = tuple(_eval_term(a, model, env) for a in args)
                name = f"{p}({','.join(map(str, key))})"
                interp[name] = _lookup(model, p, key)
                return Var(name)
            case Const():
                return g
            case Not(a):
                return Not(go(a))
            case And(a, b):
                return And(go(a), go(b))
            case Or(a, b):
                return Or(go(a), go(b))
            case Implies(a, b):
                return Implies(go(a), go(b))
            case Iff(a, b):
                return Iff(go(a), go(b))
        raise EvaluationError("only quantifier-free formulas can be grounded")

    return go(f), interp


def random_model(rng: random.Random, arities: Mapping[str, int], min_size: int = 1,
                 max_size: int = 3, degenerate: bool = False) -> FiniteModel:
    """Random finite model with the given predicate signature."""
    size = rng.randint(min_size, max_size)
    dom = tuple(range(1, size + 1))
    preds = {
        p: {key: random_triple(rng, degenerate) for key in itertools.product(dom, repeat=n)}
        for p, n in arities.items()
    }
    return FiniteModel(dom, preds)


# -- first-order scheme catalog --------------------------------------------

@dataclass(frozen=True)
class Scheme:
    number: int
    lhs: str
    rhs: str
    kind: str  # "iff": value identity; "implies": designated-valued implication

    @property
    def formula(self) -> Formula:
        cls = Iff if self.kind == "iff" else Implies
        return cls(parse_formula(self.lhs), parse_formula(self.rhs))


# ``r`` and the bare ``p`` in 11-14 are 0-ary predicates: x is not free in them.
SCHEMES = {s.number: s for s in (
    Scheme(1, "(forall x r)", "r", "iff"),
    Scheme(2, "(exists x r)", "r", "iff"),
    Scheme(3, "(forall x (forall y (p x y)))", "(forall y (forall x (p x y)))", "iff"),
    Scheme(4, "(exists x (exists y (p x y)))", "(exists y (exists x (p x y)))", "iff"),
    Scheme(5, "(forall x (forall y (p x y)))", "(forall x (p x x))", "implies"),
    Scheme(6, "(exists x (p x x))", "(exists x (exists y (p x y)))", "implies"),
    Scheme(7, "(forall x (p x))", "(exists x (p x))", "implies"),
    Scheme(8, "(exists x (forall y (p x y)))", "(forall y (exists x (p x y)))", "implies"),
    Scheme(9, "(forall x (and (p x) (q x)))", "(and (forall x (p x)) (forall x (q x)))", "iff"),
    Scheme(10, "(exists x (or (p x) (q x)))", "(or (exists x (p x)) (exists x (q x)))", "iff"),
    Scheme(11, "(and p (forall x (q x)))", "(forall x (and p (q x)))", "iff"),
    Scheme(12, "(or p (forall x (q x)))", "(forall x (or p (q x)))", "iff"),
    Scheme(13, "(and p (exists x (q x)))", "(exists x (and p (q x)))", "iff"),
    Scheme(14, "(or p (exists x (q x)))", "(exists x (or p (q x)))", "iff"),
    Scheme(15, "(forall x (implies (p x) (q x)))", "(implies (forall x (p x)) (forall x (q x)))", "implies"),
    Scheme(16, "(forall x (implies (p x) (q x)))", "(implies (exists x (p x)) (exists x (q x)))", "implies"),
    Scheme(17, "(exists x (and (p x) (q x)))", "(and (exists x (p x)) (exists x (q x)))", "implies"),
    Scheme(18, "(or (forall x (p x)) (forall x (q x)))", "(forall x (or (p x) (q x)))", "implies"),
    Scheme(19, "(not (exists x (not (p x))))", "(forall x (p x))", "iff"),
    Scheme(20, "(not (forall x (not (p x))))", "(exists x (p x))", "iff"),
    Scheme(21, "(not (exists x (p x)))", "(forall x (not (p x)))", "iff"),
    Scheme(22, "(exists x (not (p x)))", "(not (forall x (p x)))", "iff"),
)}


@dataclass(frozen=True)
class SchemaReport:
    number: int
    kind: str
    holds: bool
    trials: int
    convention: DesignatedConvention
    counterexample: FiniteModel | None = None
    lhs_value: InsTriple | None = None
    rhs_value: InsTriple | None = None

    def __str__(self):
        if self.holds:
            return f"scheme {self.number}: holds on {self.trials} random models"
        return (f"scheme {self.number}: counterexample on domain {self.counterexample.domain}"
                f" (lhs {self.lhs_value}, rhs {self.rhs_value})")


def check_schema_identity(number: int, trials: int = 100, seed: int = 0,
                          convention: DesignatedConvention = PREDICATE,
                          degenerate: bool = False) -> SchemaReport:
    """Test a catalog scheme on random finite models.

    ``iff`` schemes must give equal values on both sides; ``implies``
    schemes must evaluate to the designated truth.
    """
    if number not in SCHEMES:
        raise KeyError(f"unknown scheme {number}; the catalog has 1..{len(SCHEMES)}")
    s = SCHEMES[number]
    lhs, rhs = parse_formula(s.lhs), parse_formula(s.rhs)
    arities = predicate_arities(s.formula)
    rng = random.Random(seed)
    for n in range(1, trials + 1):
        model = random_model(rng, arities, degenerate=degenerate)
        a = eval_pred(lhs, model, convention=convention)
        b = eval_pred(rhs, model, convention=convention)
        ok = a == b if s.kind == "iff" else impl(a, b) == convention.truth
        if not ok:
            return SchemaReport(number, s.kind, False, n, convention, model, a, b)
    return SchemaReport(number, s.kind, True, trials, convention)
