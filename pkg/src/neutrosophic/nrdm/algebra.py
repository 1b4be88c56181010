"""Generalized relational algebra on belief/doubt relations.

Every operator accepts NeutroRelation or MultiRelation operands.  On
NeutroRelations each tuple has exactly one (belief, doubt) value and the
result is a NeutroRelation.  When a MultiRelation is involved, each tuple
offers a set of alternative rows (absent = the single row <0,0>); the
operator is applied to every combination of alternatives and the distinct
results form the rows of a MultiRelation.  ``combine`` then folds those back
into a single pair per tuple, which is how inconsistent inputs are handled
(see :func:`with_split`).

``domain`` selects the range of enumerations that reach beyond stored
tuples (join extensions, projection extensions, guard selection):
``"full"`` uses the declared domains, ``"active"`` only stored tuples.
"""
from __future__ import annotations

import functools
import itertools
from typing import Callable, Iterable, Mapping

from ..errors import SchemeError
from .relation import (
    ABSENT,
    MultiRelation,
    NeutroRelation,
    Scheme,
    combine,
    split,
)

_ZERO = ABSENT.pair
DOMAIN_MODES = ("full", "active")


def _stored(r) -> list:
    return r.stored()


def _is_multi(*rels) -> bool:
    return any(isinstance(r, MultiRelation) for r in rels)


def _build(scheme: Scheme, results: Mapping[tuple, set], multi: bool):
    """Assemble the result, dropping tuples whose only value is <0,0>."""
    kept = {t: ps for t, ps in results.items() if ps - {_ZERO}}
    if multi:
        return MultiRelation.from_groups(scheme, kept)
    out = {}
    for t, ps in kept.items():
        assert len(ps) == 1, "single-valued operands gave several results"
        out[t] = next(iter(ps))
    return NeutroRelation(scheme, out)


def _check_mode(domain: str):
    if domain not in DOMAIN_MODES:
        raise ValueError(f"domain must be one of {DOMAIN_MODES}, got {domain!r}")


def _same_scheme(r, s):
    if r.scheme != s.scheme:
        raise SchemeError(f"schemes differ: {r.scheme} vs {s.scheme}")


def _pointwise(r, s, fn):
    _same_scheme(r, s)
    keys = set(_stored(r)) | set(_stored(s))
    results = {
        t: {fn(p, q) for p in r.alternatives(t) for q in s.alternatives(t)}
        for t in keys
    }
    return _build(r.scheme, results, _is_multi(r, s))


def n_union(r, s):
    """<max belief, min doubt>."""
    return _pointwise(r, s, lambda p, q: (max(p[0], q[0]), min(p[1], q[1])))


def n_intersect(r, s):
    """<min belief, max doubt>."""
    return _pointwise(r, s, lambda p, q: (min(p[0], q[0]), max(p[1], q[1])))


def n_difference(r, s):
    """<min(belief_R, doubt_S), max(doubt_R, belief_S)>."""
    return _pointwise(r, s, lambda p, q: (min(p[0], q[1]), max(p[1], q[0])))


def n_complement(r):
    """Swap belief and doubt."""
    results = {t: {(d, b) for b, d in r.alternatives(t)} for t in _stored(r)}
    return _build(r.scheme, results, _is_multi(r))


def n_join(r, s, domain: str = "full"):
    """Natural join: <min of the two beliefs, max of the two doubts>.

    The output scheme is r's attributes followed by s's new ones.
    """
    _check_mode(domain)
    out_scheme = r.scheme.union(s.scheme)
    to_r = out_scheme.projector(r.scheme.attrs)
    to_s = out_scheme.projector(s.scheme.attrs)
    shared = [a for a in r.scheme.attrs if a in set(s.scheme.attrs)]
    candidates: set = set()
    if domain == "full":
        r_only = [a for a in out_scheme.attrs if a not in set(s.scheme.attrs)]
        s_only = [a for a in out_scheme.attrs if a not in set(r.scheme.attrs)]
        candidates |= _extend(out_scheme, r.scheme.attrs, _stored(r), s_only)
        candidates |= _extend(out_scheme, s.scheme.attrs, _stored(s), r_only)
    else:
        key_r = r.scheme.projector(shared)
        key_s = s.scheme.projector(shared)
        by_key: dict = {}
        for u in _stored(s):
            by_key.setdefault(key_s(u), []).append(u)
        for t in _stored(r):
            for u in by_key.get(key_r(t), ()):
                vals = dict(zip(r.scheme.attrs, t))
                vals.update(zip(s.scheme.attrs, u))
                candidates.add(tuple(vals[a] for a in out_scheme.attrs))
    results = {
        t: {(min(p[0], q[0]), max(p[1], q[1]))
            for p in r.alternatives(to_r(t)) for q in s.alternatives(to_s(t))}
        for t in candidates
    }
    return _build(out_scheme, results, _is_multi(r, s))


def _extend(out_scheme: Scheme, known_attrs, tuples, free_attrs) -> set:
    """All out-scheme tuples agreeing with a known tuple, free attrs over their domains."""
    pos = [out_scheme.index(a) for a in known_attrs]
    free_pos = [out_scheme.index(a) for a in free_attrs]
    free_domains = [out_scheme.domains[i] for i in free_pos]
    out = set()
    for t in tuples:
        for ext in itertools.product(*free_domains):
            row = [None] * len(out_scheme)
            for i, v in zip(pos, t):
                row[i] = v
            for i, v in zip(free_pos, ext):
                row[i] = v
            out.add(tuple(row))
    return out


def n_product(r, s, domain: str = "full"):
    """Cartesian product: a join over disjoint schemes."""
    common = set(r.scheme.attrs) & set(s.scheme.attrs)
    if common:
        raise SchemeError(f"product needs disjoint schemes; shared: {sorted(common)}")
    return n_join(r, s, domain)


def n_project(r, attrs: Iterable[str], domain: str = "full"):
    """<max belief, min doubt> over the extensions of each projected tuple."""
    _check_mode(domain)
    attrs = tuple(attrs)
    if len(set(attrs)) != len(attrs) or not set(attrs) <= set(r.scheme.attrs):
        raise SchemeError(f"cannot project {r.scheme} onto {attrs}")
    out_scheme = r.scheme.sub(attrs)
    proj = r.scheme.projector(attrs)
    exts: dict = {}
    if domain == "full":
        rest = [a for a in r.scheme.attrs if a not in set(attrs)]
        heads = {proj(t) for t in _stored(r)}
        for h in heads:
            exts[h] = sorted(_extend(r.scheme, attrs, [h], rest), key=r.scheme.sort_key)
    else:
        for t in _stored(r):
            exts.setdefault(proj(t), []).append(t)
    results = {}
    for h, members in exts.items():
        states = None
        for u in members:
            alts = r.alternatives(u)
            if states is None:
                states = set(alts)
            else:
                states = {(max(B, b), min(D, d)) for B, D in states for b, d in alts}
        results[h] = states
    return _build(out_scheme, results, _is_multi(r))


def n_select_guard(r, pred: Callable[[Mapping], bool], domain: str = "full"):
    """Tuples satisfying ``pred`` keep their value; the rest become <0,1>.

    ``pred`` receives a mapping attribute -> value and must return a bool.
    """
    _check_mode(domain)
    tuples = r.scheme.tau() if domain == "full" else _stored(r)
    results = {}
    for t in tuples:
        ok = pred(dict(zip(r.scheme.attrs, t)))
        if not isinstance(ok, bool):
            raise TypeError(f"selection predicate returned {type(ok).__name__}, expected bool")
        results[t] = set(r.alternatives(t)) if ok else {(0.0, 1.0)}
    return _build(r.scheme, results, _is_multi(r))


def with_split(op):
    """Run ``op`` on split operands and combine the result.

    This is the protocol for arbitrary (possibly inconsistent) relations.
    """

    @functools.wraps(op)
    def wrapped(*args, **kwargs):
        args = [split(a) if isinstance(a, NeutroRelation) else a for a in args]
        out = op(*args, **kwargs)
        return combine(out) if isinstance(out, MultiRelation) else out

    return wrapped
