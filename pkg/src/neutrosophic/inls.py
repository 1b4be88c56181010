"""Interval neutrosophic logic system: fuzzy-style rule inference with T/I/F grades.

Pipeline per input vector: neutrosophize -> antecedent_combine -> rule_fire
-> aggregate -> type_reduce -> synthesize -> centroid.

Sampled curves use the (m, 6) layout of :mod:`neutrosophic.kernels`.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from . import kernels
from .errors import DomainError, NoOutputError, NoRuleFired, ParseError
from .ins import InsTriple

DEFAULT_WEIGHTS = (0.5, 0.35, 0.1, 0.05)


@dataclass(frozen=True)
class Trapezoid:
    """Trapezoidal membership a <= b <= c <= d, plateau at ``height``."""

    a: float
    b: float
    c: float
    d: float
    height: float = 1.0

    def __post_init__(self):
        if not (self.a <= self.b <= self.c <= self.d):
            raise DomainError(f"trapezoid needs a <= b <= c <= d, got {self.a, self.b, self.c, self.d}")
        if not 0.0 <= self.height <= 1.0:
            raise DomainError(f"trapezoid height must be in [0,1], got {self.height}")

    def __call__(self, x):
        x = np.asarray(x, dtype=np.float64)
        out = np.zeros_like(x)
        if self.b > self.a:
            m = (x > self.a) & (x < self.b)
            out[m] = (x[m] - self.a) / (self.b - self.a)
        out[(x >= self.b) & (x <= self.c)] = 1.0
        if self.d > self.c:
            m = (x > self.c) & (x < self.d)
            out[m] = (self.d - x[m]) / (self.d - self.c)
        return out * self.height


MembershipFn = Trapezoid


@dataclass(frozen=True)
class IntervalMF:
    """Interval-valued membership: a lower and an upper surface."""

    lower: Trapezoid
    upper: Trapezoid

    @classmethod
    def crisp(cls, mf: Trapezoid) -> "IntervalMF":
        return cls(mf, mf)

    def __call__(self, x):
        lo, hi = self.lower(x), self.upper(x)
        if np.any(lo > hi + 1e-12):
            raise DomainError("lower membership surface exceeds the upper one")
        return np.minimum(lo, hi), hi


@dataclass(frozen=True)
class LinguisticTriple:
    """Truth, indeterminacy and falsity memberships of one linguistic value."""

    t: IntervalMF
    i: IntervalMF
    f: IntervalMF
    name: str = ""

    def sample(self, x) -> np.ndarray:
        """(len(x), 6) array of interval grades."""
        x = np.atleast_1d(np.asarray(x, dtype=np.float64))
        cols = [*self.t(x), *self.i(x), *self.f(x)]
        return np.stack(cols, axis=-1)

    def at(self, x: float) -> InsTriple:
        return InsTriple.from_array(self.sample([x])[0])


@dataclass(frozen=True)
class Variable:
    name: str
    lo: float
    hi: float
    terms: Mapping[str, LinguisticTriple] = field(default_factory=dict)

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError(f"variable {self.name} needs lo < hi")


@dataclass(frozen=True)
class Rule:
    """IF x1 is A1 and ... and xn is An THEN y is B."""

    antecedents: tuple
    consequent: LinguisticTriple
    label: str = ""


@dataclass(frozen=True)
class Rulebase:
    inputs: tuple
    output: Variable
    rules: tuple

    def __post_init__(self):
        if not self.rules:
            raise DomainError("rulebase has no rules")
        for r in self.rules:
            if len(r.antecedents) != len(self.inputs):
                raise DomainError(f"rule {r.label or '?'} has {len(r.antecedents)} antecedents, "
                                  f"engine has {len(self.inputs)} inputs")


@dataclass(frozen=True)
class EngineConfig:
    weights: tuple = DEFAULT_WEIGHTS
    resolution: int = 1001
    input_mode: str = "crisp"

    def __post_init__(self):
        w = tuple(float(v) for v in self.weights)
        if len(w) != 4 or any(not 0.0 <= v <= 1.0 for v in w):
            raise DomainError("synthesis weights must be four numbers in [0,1]")
        if abs(sum(w) - 1.0) > 1e-9:
            raise DomainError(f"synthesis weights must sum to 1, got {sum(w)}")
        if self.resolution < 11:
            raise DomainError("output grid needs at least 11 points")
        if self.input_mode not in ("crisp", "set"):
            raise DomainError("input_mode must be 'crisp' or 'set'")
        object.__setattr__(self, "weights", w)


# -- pipeline steps --------------------------------------------------------

def neutrosophize(inputs: Sequence[float], rule: Rule, variables: Sequence[Variable] | None = None) -> list[InsTriple]:
    """Crisp inputs: antecedent memberships evaluated at each x_i."""
    if len(inputs) != len(rule.antecedents):
        raise DomainError("input count does not match the rule's antecedents")
    if variables is not None:
        for x, v in zip(inputs, variables):
            if not (v.lo <= x <= v.hi) or not math.isfinite(x):
                raise DomainError(f"input {v.name}={x} outside [{v.lo}, {v.hi}]")
    return [ante.at(x) for x, ante in zip(inputs, rule.antecedents)]


def neutrosophize_sets(inputs: Sequence[LinguisticTriple], rule: Rule, grids: Sequence[np.ndarray]) -> list[InsTriple]:
    """Set-valued inputs: per-variable sup-min (T), sup-max (I) and inf-max (F)."""
    out = []
    for given, ante, grid in zip(inputs, rule.antecedents, grids):
        a, b = given.sample(grid), ante.sample(grid)
        t = np.minimum(a[:, :2], b[:, :2]).max(axis=0)
        i = np.maximum(a[:, 2:4], b[:, 2:4]).max(axis=0)
        f = np.maximum(a[:, 4:], b[:, 4:]).min(axis=0)
        out.append(InsTriple.from_array(np.concatenate([t, i, f])))
    return out


def antecedent_combine(triples: Sequence[InsTriple]) -> InsTriple:
    """min over T endpoints, max over I and F endpoints."""
    arr = np.array([g.as_array() for g in triples])
    return InsTriple.from_array(np.concatenate([arr[:, :2].min(axis=0), arr[:, 2:].max(axis=0)]))


def rule_fire(g: InsTriple, consequent: LinguisticTriple, ygrid) -> np.ndarray:
    """Clip the consequent by the firing triple: min on T, max on I and F."""
    cons = consequent.sample(ygrid)
    out = np.empty_like(cons)
    s = g.as_array()
    out[:, :2] = np.minimum(s[:2], cons[:, :2])
    out[:, 2:] = np.maximum(s[2:], cons[:, 2:])
    return out


def aggregate(fired: Sequence[np.ndarray]) -> np.ndarray:
    """Union of fired outputs: max on T, min on I and F."""
    if not fired:
        raise NoRuleFired("no rule fired")
    shapes = {np.shape(b) for b in fired}
    if len(shapes) != 1:
        raise DomainError("fired outputs live on different grids")
    stack = np.stack(fired)
    return np.concatenate([stack[..., :2].max(axis=0), stack[..., 2:].min(axis=0)], axis=-1)


def type_reduce(b: np.ndarray) -> np.ndarray:
    """Interval midpoints: (m, 6) -> (m, 3) scalar T', I', F'."""
    b = np.asarray(b, dtype=np.float64)
    return (b[:, 0::2] + b[:, 1::2]) / 2.0


def synthesize(curves: np.ndarray, cfg: EngineConfig = EngineConfig()) -> np.ndarray:
    """a*T' + b*(1-F') + c*I'/2 + d*(1-I'/2)."""
    a, b, c, d = cfg.weights
    t, i, f = curves[:, 0], curves[:, 1], curves[:, 2]
    return np.clip(a * t + b * (1.0 - f) + c * i / 2.0 + d * (1.0 - i / 2.0), 0.0, 1.0)


def centroid(curve, ygrid) -> float:
    """Centre of gravity by the trapezoidal rule."""
    curve = np.asarray(curve, dtype=np.float64)
    ygrid = np.asarray(ygrid, dtype=np.float64)
    area = kernels.trapezoid(curve, ygrid)
    if not area > 0.0:
        raise NoOutputError("output curve is identically zero: no output")
    return kernels.trapezoid(curve * ygrid, ygrid) / area


# -- full run --------------------------------------------------------------

@dataclass
class RuleTrace:
    label: str
    memberships: list
    strength: InsTriple
    fired: bool
    output: np.ndarray | None = None


@dataclass
class InferenceResult:
    output: float
    ygrid: np.ndarray
    rules: list
    aggregate: np.ndarray
    reduced: np.ndarray
    synthesized: np.ndarray

    def describe(self) -> str:
        lines = []
        for r in self.rules:
            ms = ", ".join(str(m) for m in r.memberships)
            state = "fired" if r.fired else "not fired"
            lines.append(f"rule {r.label}: memberships [{ms}] strength {r.strength} ({state})")
        k = int(np.argmax(self.synthesized))
        lines.append(f"aggregate peak at y={self.ygrid[k]:.6g}: synthesized {self.synthesized[k]:.6g}")
        lines.append(f"output {self.output:.9g}")
        return "\n".join(lines)


def output_grid(var: Variable, resolution: int) -> np.ndarray:
    return np.linspace(var.lo, var.hi, resolution)


def run_inference(rb: Rulebase, inputs: Mapping[str, object] | Sequence, cfg: EngineConfig = EngineConfig()) -> InferenceResult:
    """Evaluate the rulebase.  Only rules whose firing truth has a positive
    upper bound take part in aggregation; with none, :class:`NoRuleFired`.
    """
    if isinstance(inputs, Mapping):
        missing = [v.name for v in rb.inputs if v.name not in inputs]
        if missing:
            raise DomainError(f"missing inputs: {', '.join(missing)}")
        xs = [inputs[v.name] for v in rb.inputs]
    else:
        xs = list(inputs)
    ygrid = output_grid(rb.output, cfg.resolution)
    traces, strengths, cons = [], [], []
    for k, rule in enumerate(rb.rules):
        if cfg.input_mode == "crisp":
            ms = neutrosophize([float(x) for x in xs], rule, rb.inputs)
        else:
            grids = [np.linspace(v.lo, v.hi, cfg.resolution) for v in rb.inputs]
            ms = neutrosophize_sets(xs, rule, grids)
        g = antecedent_combine(ms)
        fired = g.t.sup > 0.0
        traces.append(RuleTrace(rule.label or f"r{k + 1}", ms, g, fired))
        if fired:
            strengths.append(g.as_array())
            cons.append(rule.consequent.sample(ygrid))
    if not strengths:
        raise NoRuleFired("no rule fired")
    fired_curves, agg = kernels.fire_aggregate(np.array(strengths), np.array(cons))
    if not np.any(agg[:, :2] > 0.0):
        raise NoRuleFired("no rule fired: aggregate truth is identically zero")
    j = 0
    for tr in traces:
        if tr.fired:
            tr.output = fired_curves[j]
            j += 1
    reduced = type_reduce(agg)
    synth = synthesize(reduced, cfg)
    return InferenceResult(centroid(synth, ygrid), ygrid, traces, agg, reduced, synth)


# -- rulebase text format --------------------------------------------------

_VAR = re.compile(r"(input|output)\s+(\w+)\s*\[\s*([^,\]]+)\s*,\s*([^\]]+)\]")
_TERM = re.compile(r"term\s+(\w+)\s+(\w+)\s+(.*)")
_RULE = re.compile(r"rule(?:\s+(\w+))?\s*:\s*if\s+(.+?)\s+then\s+(\w+)\s+is\s+(\w+)", re.IGNORECASE)
_COMP = re.compile(r"([TIF])\s*=\s*(.+?)(?=\s+[TIF]\s*=|$)")
_SHAPE = re.compile(r"(trap|const)\(([^)]*)\)")


def _parse_shape(text: str, var: Variable) -> Trapezoid:
    m = _SHAPE.fullmatch(text.strip())
    if not m:
        raise ParseError(f"expected trap(a,b,c,d[;h]) or const(v), got {text.strip()!r}")
    kind, body = m.groups()
    main, _, h = body.partition(";")
    nums = [float(v) for v in main.split(",") if v.strip()]
    if kind == "const":
        if len(nums) != 1 or h:
            raise ParseError("const takes one value")
        return Trapezoid(var.lo, var.lo, var.hi, var.hi, nums[0])
    if len(nums) != 4:
        raise ParseError("trap takes four corner points")
    if nums[0] < var.lo or nums[3] > var.hi:
        raise ParseError(f"trapezoid {nums} leaves the range of {var.name}")
    return Trapezoid(*nums, height=float(h) if h.strip() else 1.0)


def _parse_mf(text: str, var: Variable) -> IntervalMF:
    lower, sep, upper = text.partition("..")
    lo = _parse_shape(lower, var)
    return IntervalMF(lo, _parse_shape(upper, var) if sep else lo)


def parse_rulebase(text: str) -> Rulebase:
    """Read the declarative rulebase format.

    ::

        input x1 [0, 10]
        output y [0, 10]
        term x1 low T=trap(0,0,2,5) I=const(0.1) F=trap(3,6,10,10)
        term y mid T=trap(3,5,5,7)..trap(2,5,5,8) I=const(0) F=trap(0,0,3,5)
        rule r1: if x1 is low then y is mid

    ``lower..upper`` gives an interval-valued membership; ``;h`` sets the
    plateau height of a trapezoid.
    """
    inputs: dict[str, Variable] = {}
    output: Variable | None = None
    terms: dict[str, dict[str, LinguisticTriple]] = {}
    pending_rules = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if m := _VAR.fullmatch(line):
                kind, name, lo, hi = m.groups()
                var = Variable(name, float(lo), float(hi))
                if name in inputs or (output and output.name == name):
                    raise ParseError(f"variable {name} declared twice")
                if kind == "input":
                    inputs[name] = var
                elif output is not None:
                    raise ParseError("only one output variable is supported")
                else:
                    output = var
                terms[name] = {}
            elif m := _TERM.fullmatch(line):
                vname, tname, rest = m.groups()
                var = inputs.get(vname) or (output if output and output.name == vname else None)
                if var is None:
                    raise ParseError(f"term for undeclared variable {vname}")
                comps = {k: _parse_mf(v, var) for k, v in _COMP.findall(rest)}
                if set(comps) != {"T", "I", "F"}:
                    raise ParseError("a term needs T=, I= and F= memberships")
                terms[vname][tname] = LinguisticTriple(comps["T"], comps["I"], comps["F"], f"{vname}.{tname}")
            elif m := _RULE.fullmatch(line):
                pending_rules.append((n, m.groups()))
            else:
                raise ParseError("unrecognised line")
        except (ParseError, DomainError, ValueError) as exc:
            raise ParseError(getattr(exc, "message", str(exc)), line=n) from None
    if output is None:
        raise ParseError("rulebase declares no output variable")
    if not inputs:
        raise ParseError("rulebase declares no input variables")
    order = list(inputs)
    rules = []
    for n, (label, cond, yname, yterm) in pending_rules:
        if yname != output.name or yterm not in terms[yname]:
            raise ParseError(f"unknown consequent {yname} is {yterm}", line=n)
        ante = {}
        for clause in re.split(r"\s+and\s+", cond, flags=re.IGNORECASE):
            cm = re.fullmatch(r"(\w+)\s+is\s+(\w+)", clause.strip())
            if not cm or cm.group(1) not in inputs or cm.group(2) not in terms[cm.group(1)]:
                raise ParseError(f"bad antecedent {clause.strip()!r}", line=n)
            if cm.group(1) in ante:
                raise ParseError(f"variable {cm.group(1)} appears twice", line=n)
            ante[cm.group(1)] = terms[cm.group(1)][cm.group(2)]
        if set(ante) != set(order):
            raise ParseError("a rule must constrain every input variable", line=n)
        rules.append(Rule(tuple(ante[v] for v in order), terms[yname][yterm], label or f"r{len(rules) + 1}"))
    vars_ = tuple(Variable(v.name, v.lo, v.hi, terms[v.name]) for v in inputs.values())
    out = Variable(output.name, output.lo, output.hi, terms[output.name])
    return Rulebase(vars_, out, tuple(rules))

