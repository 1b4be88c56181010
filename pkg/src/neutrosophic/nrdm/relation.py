"""Relations whose tuples carry a belief/doubt pair."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from ..errors import DomainError, EvaluationError, SchemeError
from ..interval import fmt_num

EPS = 1e-9
# Upper bound on tuples materialised by full-domain enumeration.
MAX_ENUMERATION = 1_000_000


@dataclass(frozen=True)
class Scheme:
    """Ordered attribute names, each with a finite declared domain."""

    attrs: tuple
    domains: tuple
    domain_names: tuple = ()

    def __post_init__(self):
        attrs = tuple(self.attrs)
        doms = tuple(tuple(d) for d in self.domains)
        names = tuple(self.domain_names) or (None,) * len(attrs)
        if len(set(attrs)) != len(attrs):
            raise SchemeError(f"duplicate attribute names in {attrs}")
        if len(doms) != len(attrs) or len(names) != len(attrs):
            raise SchemeError("each attribute needs exactly one domain")
        for a, d in zip(attrs, doms):
            if not d:
                raise SchemeError(f"domain of {a} is empty")
            if len(set(d)) != len(d):
                raise SchemeError(f"domain of {a} repeats a member")
        object.__setattr__(self, "attrs", attrs)
        object.__setattr__(self, "domains", doms)
        object.__setattr__(self, "domain_names", names)
        object.__setattr__(self, "_pos", {a: i for i, a in enumerate(attrs)})
        object.__setattr__(self, "_rank", tuple({v: k for k, v in enumerate(d)} for d in doms))

    @classmethod
    def of(cls, **attr_domains) -> "Scheme":
        """``Scheme.of(X=("a","b"), Y=("a","b"))``."""
        return cls(tuple(attr_domains), tuple(attr_domains.values()))

    def __len__(self):
        return len(self.attrs)

    def __eq__(self, other):
        return isinstance(other, Scheme) and self.attrs == other.attrs and self.domains == other.domains

    def __hash__(self):
        return hash((self.attrs, self.domains))

    def index(self, attr: str) -> int:
        try:
            return self._pos[attr]
        except KeyError:
            raise SchemeError(f"attribute {attr!r} not in scheme {self.attrs}") from None

    def domain(self, attr: str) -> tuple:
        return self.domains[self.index(attr)]

    def size(self) -> int:
        return math.prod(len(d) for d in self.domains)

    def tau(self) -> Iterator[tuple]:
        """Every tuple over the declared domains, in domain order."""
        if self.size() > MAX_ENUMERATION:
            raise EvaluationError(f"domain guard: scheme {self.attrs} has {self.size()} tuples")
        return itertools.product(*self.domains)

    def conforms(self, t: tuple) -> bool:
        return len(t) == len(self.attrs) and all(v in r for v, r in zip(t, self._rank))

    def check(self, t: tuple) -> tuple:
        t = tuple(t)
        if len(t) != len(self.attrs):
            raise SchemeError(f"tuple {t} has arity {len(t)}, scheme {self.attrs} has {len(self.attrs)}")
        for a, v, r in zip(self.attrs, t, self._rank):
            if v not in r:
                raise SchemeError(f"value {v!r} is not in the domain of {a}")
        return t

    def sort_key(self, t: tuple):
        return tuple(r[v] for r, v in zip(self._rank, t))

    def sub(self, attrs: Iterable[str]) -> "Scheme":
        idx = [self.index(a) for a in attrs]
        return Scheme(tuple(self.attrs[i] for i in idx), tuple(self.domains[i] for i in idx),
                      tuple(self.domain_names[i] for i in idx))

    def union(self, other: "Scheme") -> "Scheme":
        """Attributes of self followed by other's new ones; shared ones must agree."""
        extra = []
        for a, d, n in zip(other.attrs, other.domains, other.domain_names):
            if a in self._pos:
                if self.domain(a) != d:
                    raise SchemeError(f"attribute {a} has conflicting domains")
            else:
                extra.append((a, d, n))
        return Scheme(self.attrs + tuple(e[0] for e in extra), self.domains + tuple(e[1] for e in extra),
                      self.domain_names + tuple(e[2] for e in extra))

    def rename(self, attrs: Iterable[str]) -> "Scheme":
        return Scheme(tuple(attrs), self.domains, self.domain_names)

    def projector(self, attrs: Iterable[str]):
        idx = [self.index(a) for a in attrs]
        return lambda t: tuple(t[i] for i in idx)

    def __str__(self):
        return "(" + ", ".join(self.attrs) + ")"


@dataclass(frozen=True, slots=True)
class ConfidencePair:
    """Belief and doubt that a tuple belongs to a relation."""

    belief: float
    doubt: float

    def __post_init__(self):
        b, d = float(self.belief), float(self.doubt)
        for name, v in (("belief", b), ("doubt", d)):
            if not (math.isfinite(v) and 0.0 <= v <= 1.0):
                raise DomainError(f"{name} must lie in [0,1], got {v}")
        object.__setattr__(self, "belief", b)
        object.__setattr__(self, "doubt", d)

    @property
    def pair(self) -> tuple:
        return (self.belief, self.doubt)

    def is_consistent(self) -> bool:
        return self.belief + self.doubt <= 1.0 + EPS

    def __str__(self):
        return f"<{fmt_num(self.belief)},{fmt_num(self.doubt)}>"


ABSENT = ConfidencePair(0.0, 0.0)


def _pair(v) -> ConfidencePair:
    return v if isinstance(v, ConfidencePair) else ConfidencePair(*v)


class NeutroRelation:
    """One belief/doubt pair per stored tuple; unstored tuples read as <0,0>."""

    __slots__ = ("scheme", "rows")

    def __init__(self, scheme: Scheme, rows: Mapping | Iterable = ()):
        items = rows.items() if isinstance(rows, Mapping) else rows
        out = {}
        for t, v in items:
            t = scheme.check(t)
            if t in out:
                raise SchemeError(f"duplicate tuple {t}")
            out[t] = _pair(v)
        self.scheme = scheme
        self.rows = MappingProxyType(out)

    def get(self, t: tuple) -> ConfidencePair:
        return self.rows.get(tuple(t), ABSENT)

    def __getitem__(self, t) -> ConfidencePair:
        return self.get(t)

    def alternatives(self, t: tuple) -> tuple:
        return (self.get(t).pair,)

    def stored(self) -> list:
        return sorted(self.rows, key=self.scheme.sort_key)

    def items(self):
        return [(t, self.rows[t]) for t in self.stored()]

    def __len__(self):
        return len(self.rows)

    def __eq__(self, other):
        return isinstance(other, NeutroRelation) and self.scheme == other.scheme and dict(self.rows) == dict(other.rows)

    def __hash__(self):
        return hash((self.scheme, frozenset(self.rows.items())))

    def canonical(self) -> "NeutroRelation":
        """Drop stored rows equal to <0,0>."""
        return NeutroRelation(self.scheme, {t: p for t, p in self.rows.items() if p != ABSENT})

    def with_scheme(self, scheme: Scheme) -> "NeutroRelation":
        return NeutroRelation(scheme, self.rows)

    def __repr__(self):
        body = ", ".join(f"{t}: {p}" for t, p in self.items())
        return f"NeutroRelation{self.scheme}{{{body}}}"


class MultiRelation:
    """Relation that may hold several distinct belief/doubt rows per tuple."""

    __slots__ = ("scheme", "groups")

    def __init__(self, scheme: Scheme, rows: Iterable = ()):
        groups: dict = {}
        for t, v in rows:
            t = scheme.check(t)
            groups.setdefault(t, set()).add(_pair(v).pair)
        self.scheme = scheme
        self.groups = MappingProxyType({t: tuple(sorted(v)) for t, v in groups.items()})

    @classmethod
    def from_groups(cls, scheme: Scheme, groups: Mapping) -> "MultiRelation":
        return cls(scheme, ((t, p) for t, ps in groups.items() for p in ps))

    def alternatives(self, t: tuple) -> tuple:
        return self.groups.get(tuple(t), (ABSENT.pair,))

    @property
    def rows(self) -> list:
        """Flat sorted list of (tuple, ConfidencePair)."""
        return [(t, ConfidencePair(*p)) for t in self.stored() for p in self.groups[t]]

    def stored(self) -> list:
        return sorted(self.groups, key=self.scheme.sort_key)

    def __len__(self):
        return sum(len(v) for v in self.groups.values())

    def __eq__(self, other):
        return isinstance(other, MultiRelation) and self.scheme == other.scheme and dict(self.groups) == dict(other.groups)

    def __hash__(self):
        return hash((self.scheme, frozenset(self.groups.items())))

    def __repr__(self):
        body = ", ".join(f"{t}: <{b:g},{d:g}>" for t, p in self.rows for b, d in [p.pair])
        return f"MultiRelation{self.scheme}{{{body}}}"


class FuzzyRelation:
    """Total map from every tuple of the scheme to a grade in [0,1]."""

    __slots__ = ("scheme", "grades")

    def __init__(self, scheme: Scheme, grades: Mapping | None = None, default: float = 0.0):
        g = {t: default for t in scheme.tau()}
        for t, v in (grades or {}).items():
            t = scheme.check(t)
            v = float(v)
            if not 0.0 <= v <= 1.0:
                raise DomainError(f"fuzzy grade {v} outside [0,1]")
            g[t] = v
        self.scheme = scheme
        self.grades = MappingProxyType(g)

    def __getitem__(self, t) -> float:
        return self.grades[tuple(t)]

    def __eq__(self, other):
        return isinstance(other, FuzzyRelation) and self.scheme == other.scheme and dict(self.grades) == dict(other.grades)

    def __hash__(self):
        return hash((self.scheme, frozenset(self.grades.items())))

    def __repr__(self):
        return f"FuzzyRelation{self.scheme}{dict(self.grades)}"


# -- classification, split, combine ---------------------------------------

@dataclass(frozen=True)
class Classification:
    consistent: bool
    complete: bool
    total: bool
    pseudo_consistent: bool
    inconsistent: bool

    def labels(self) -> list[str]:
        names = ("consistent", "complete", "total", "pseudo_consistent", "inconsistent")
        return [n.replace("_", "-") for n in names if getattr(self, n)]

    def __str__(self):
        return ", ".join(self.labels()) or "none"


def classify(r: NeutroRelation | MultiRelation) -> Classification:
    """Flags over stored tuples.

    For a MultiRelation, consistency and completeness are judged on each
    tuple's combined maxima; it is pseudo-consistent when every row is
    consistent yet some tuple's rows with b+d = 1 have maxima summing past 1.
    """
    groups = _groups(r)
    row_ok = all(b + d <= 1.0 + EPS for ps in groups.values() for b, d in ps)
    combined = [(max(b for b, _ in ps), max(d for _, d in ps)) for ps in groups.values()]
    consistent = all(b + d <= 1.0 + EPS for b, d in combined)
    complete = all(b + d >= 1.0 - EPS for b, d in combined)
    pseudo = False
    if row_ok:
        for ps in groups.values():
            tight = [(b, d) for b, d in ps if abs(b + d - 1.0) <= EPS]
            if tight and max(b for b, _ in tight) + max(d for _, d in tight) > 1.0 + EPS:
                pseudo = True
                break
    return Classification(
        consistent=consistent,
        complete=complete,
        total=consistent and complete,
        pseudo_consistent=pseudo,
        inconsistent=not row_ok,
    )


def _groups(r) -> dict:
    if isinstance(r, MultiRelation):
        return dict(r.groups)
    return {t: (p.pair,) for t, p in r.rows.items()}


def split(r: NeutroRelation | MultiRelation) -> MultiRelation:
    """Rows with b+d > 1 become (b, 1-b) and (1-d, d); others pass through."""
    out = []
    for t, ps in _groups(r).items():
        for b, d in ps:
            if b + d > 1.0:
                out.append((t, (b, 1.0 - b)))
                out.append((t, (1.0 - d, d)))
            else:
                out.append((t, (b, d)))
    return MultiRelation(r.scheme, out)


def combine(r: MultiRelation | NeutroRelation) -> NeutroRelation:
    """Per tuple: maximum belief and maximum doubt over its rows."""
    groups = _groups(r)
    return NeutroRelation(r.scheme, {
        t: (max(b for b, _ in ps), max(d for _, d in ps)) for t, ps in groups.items()
    })
