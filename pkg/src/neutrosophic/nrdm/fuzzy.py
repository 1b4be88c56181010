"""Classical fuzzy-relational operators, the reference semantics for reps."""
from __future__ import annotations

from typing import Callable, Iterable, Mapping

from ..errors import SchemeError
from .relation import FuzzyRelation


def _same(r: FuzzyRelation, s: FuzzyRelation):
    if r.scheme != s.scheme:
        raise SchemeError(f"schemes differ: {r.scheme} vs {s.scheme}")


def f_union(r: FuzzyRelation, s: FuzzyRelation) -> FuzzyRelation:
    _same(r, s)
    return FuzzyRelation(r.scheme, {t: max(v, s[t]) for t, v in r.grades.items()})


def f_intersect(r: FuzzyRelation, s: FuzzyRelation) -> FuzzyRelation:
    _same(r, s)
    return FuzzyRelation(r.scheme, {t: min(v, s[t]) for t, v in r.grades.items()})


def f_difference(r: FuzzyRelation, s: FuzzyRelation) -> FuzzyRelation:
    _same(r, s)
    return FuzzyRelation(r.scheme, {t: min(v, 1.0 - s[t]) for t, v in r.grades.items()})


def f_complement(r: FuzzyRelation) -> FuzzyRelation:
    return FuzzyRelation(r.scheme, {t: 1.0 - v for t, v in r.grades.items()})


def f_join(r: FuzzyRelation, s: FuzzyRelation) -> FuzzyRelation:
    scheme = r.scheme.union(s.scheme)
    to_r = scheme.projector(r.scheme.attrs)
    to_s = scheme.projector(s.scheme.attrs)
    return FuzzyRelation(scheme, {t: min(r[to_r(t)], s[to_s(t)]) for t in scheme.tau()})


def f_project(r: FuzzyRelation, attrs: Iterable[str]) -> FuzzyRelation:
    attrs = tuple(attrs)
    if not set(attrs) <= set(r.scheme.attrs):
        raise SchemeError(f"cannot project {r.scheme} onto {attrs}")
    scheme = r.scheme.sub(attrs)
    proj = r.scheme.projector(attrs)
    out: dict = {}
    for t, v in r.grades.items():
        h = proj(t)
        out[h] = max(out.get(h, 0.0), v)
    return FuzzyRelation(scheme, out)


def f_select(r: FuzzyRelation, pred: Callable[[Mapping], bool]) -> FuzzyRelation:
    return FuzzyRelation(r.scheme, {
        t: (v if pred(dict(zip(r.scheme.attrs, t))) else 0.0) for t, v in r.grades.items()
    })


FUZZY_OPS = {
    "union": f_union,
    "complement": f_complement,
    "intersection": f_intersect,
    "difference": f_difference,
    "join": f_join,
    "project": f_project,
    "select": f_select,
}


def fuzzy_algebra(op: str, *args, **kwargs) -> FuzzyRelation:
    """Dispatch by operator name (see :data:`FUZZY_OPS`)."""
    try:
        fn = FUZZY_OPS[op]
    except KeyError:
        raise ValueError(f"unknown fuzzy operator {op!r}; expected one of {sorted(FUZZY_OPS)}") from None
    return fn(*args, **kwargs)
