"""Completions of consistent relations and the strong-generalization check.

A consistent relation R represents every fuzzy relation Q with
belief(t) <= Q(t) <= 1 - doubt(t).  On a grid {0, 1/k, ..., 1} that set is
finite; it is stored as an int matrix of grid indices, one row per
completion and one column per tuple of the scheme (in ``Scheme.tau`` order).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .. import kernels
from ..errors import DomainError, EvaluationError
from .algebra import (
    n_complement,
    n_difference,
    n_intersect,
    n_join,
    n_project,
    n_select_guard,
    n_union,
)
from .relation import EPS, FuzzyRelation, NeutroRelation, Scheme, classify

DEFAULT_MAX_TUPLES = 6


@dataclass(frozen=True)
class Completions:
    scheme: Scheme
    tuples: tuple
    k: int
    matrix: np.ndarray  # (n_completions, n_tuples) grid indices

    def __len__(self):
        return self.matrix.shape[0]

    def relations(self) -> list[FuzzyRelation]:
        return [self.decode(row) for row in self.matrix]

    def decode(self, row) -> FuzzyRelation:
        return FuzzyRelation(self.scheme, {t: int(v) / self.k for t, v in zip(self.tuples, row)})

    def codes(self) -> np.ndarray:
        return kernels.unique_rows(self.matrix, self.k + 1)


def _grid_index(x: float, k: int, what: str) -> int:
    v = x * k
    n = round(v)
    if abs(v - n) > 1e-9:
        raise DomainError(f"{what} {x} is not on the grid of step 1/{k}")
    return int(n)


def reps_enum(r: NeutroRelation, k: int, max_tuples: int = DEFAULT_MAX_TUPLES) -> Completions:
    """All grid-valued completions of a consistent relation."""
    if k < 1:
        raise DomainError("grid needs k >= 1")
    if not classify(r).consistent:
        raise DomainError("reps is only defined for consistent relations")
    tuples = tuple(r.scheme.tau()) if r.scheme.size() <= max_tuples else None
    if tuples is None:
        raise EvaluationError(f"size guard: |tau| = {r.scheme.size()} exceeds {max_tuples}")
    ranges = []
    for t in tuples:
        p = r.get(t)
        lo = _grid_index(p.belief, k, "belief")
        hi = k - _grid_index(p.doubt, k, "doubt")
        if lo > hi:  # pragma: no cover - excluded by consistency
            raise DomainError(f"empty gap at {t}")
        ranges.append(np.arange(lo, hi + 1, dtype=np.int64))
    if math.prod(len(x) for x in ranges) > 50_000_000:
        raise EvaluationError("size guard: too many completions")
    if ranges:
        mesh = np.meshgrid(*ranges, indexing="ij")
        matrix = np.stack([m.ravel() for m in mesh], axis=1)
    else:
        matrix = np.zeros((1, 0), dtype=np.int64)
    return Completions(r.scheme, tuples, k, matrix)


def _index_map(out: Scheme, sub: Scheme, sub_tuples: tuple) -> np.ndarray:
    pos = {t: i for i, t in enumerate(sub_tuples)}
    proj = out.projector(sub.attrs)
    return np.array([pos[proj(t)] for t in out.tau()], dtype=np.int64)


@dataclass(frozen=True)
class GenVerdict:
    op: str
    equal: bool
    lhs_size: int
    rhs_size: int
    witness: FuzzyRelation | None = None
    witness_side: str | None = None

    def __str__(self):
        if self.equal:
            return f"{self.op}: reps commute ({self.lhs_size} completions)"
        return (f"{self.op}: reps differ ({self.lhs_size} vs {self.rhs_size}); "
                f"{self.witness_side} witness {dict(self.witness.grades)}")


BINARY = {"union", "intersection", "difference", "join"}
UNARY = {"complement", "project", "select"}


def strong_gen_check(op: str, r: NeutroRelation, s: NeutroRelation | None = None, k: int = 2,
                     attrs=None, pred=None, max_tuples: int = 8) -> GenVerdict:
    """Compare reps(op^(R, S)) with {op(Q, P) : Q in reps R, P in reps S}.

    ``attrs`` is the projection list for ``project``; ``pred`` the
    predicate for ``select``.  Both sides are finite sets of grid-valued
    fuzzy relations, compared exactly.
    """
    if op in BINARY and s is None:
        raise ValueError(f"{op} needs two relations")
    if op not in BINARY | UNARY:
        raise ValueError(f"unknown operator {op!r}")
    reps_r = reps_enum(r, k, max_tuples)
    if op in BINARY:
        reps_s = reps_enum(s, k, max_tuples)
        neutro = {"union": n_union, "intersection": n_intersect,
                  "difference": n_difference, "join": n_join}[op](r, s)
        if op == "join":
            ia = _index_map(neutro.scheme, r.scheme, reps_r.tuples)
            ib = _index_map(neutro.scheme, s.scheme, reps_s.tuples)
            code = kernels.OP_MIN
        else:
            ia = ib = np.arange(len(reps_r.tuples), dtype=np.int64)
            code = {"union": kernels.OP_MAX, "intersection": kernels.OP_MIN,
                    "difference": kernels.OP_MIN_NEG}[op]
        image = kernels.image_binary(reps_r.matrix, reps_s.matrix, ia, ib, code, k)
    elif op == "complement":
        neutro = n_complement(r)
        image = k - reps_r.matrix
    elif op == "project":
        if attrs is None:
            raise ValueError("project needs attrs")
        neutro = n_project(r, attrs)
        group = _index_map(r.scheme, neutro.scheme, tuple(neutro.scheme.tau()))
        image = kernels.image_project(reps_r.matrix, group, neutro.scheme.size())
    else:
        if pred is None:
            raise ValueError("select needs pred")
        neutro = n_select_guard(r, pred)
        mask = np.array([pred(dict(zip(r.scheme.attrs, t))) for t in reps_r.tuples], dtype=np.int64)
        image = reps_r.matrix * mask
    lhs = reps_enum(neutro, k, max_tuples)
    lhs_codes = lhs.codes()
    rhs_codes = kernels.unique_rows(image, k + 1)
    if lhs_codes.shape == rhs_codes.shape and np.array_equal(lhs_codes, rhs_codes):
        return GenVerdict(op, True, len(lhs_codes), len(rhs_codes))
    only_lhs = _setdiff(lhs_codes, rhs_codes)
    side, codes = ("lhs-only", only_lhs) if len(only_lhs) else ("rhs-only", _setdiff(rhs_codes, lhs_codes))
    witness = lhs.decode(_decode(codes[0], k + 1, len(lhs.tuples)))
    return GenVerdict(op, False, len(lhs_codes), len(rhs_codes), witness, side)


def _setdiff(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.ndim == 1:
        return np.setdiff1d(a, b)
    bset = {tuple(x) for x in b}
    return np.array([x for x in a if tuple(x) not in bset])


def _decode(code, base: int, width: int):
    if np.ndim(code) == 1:
        return code
    out = []
    c = int(code)
    for _ in range(width):
        c, d = divmod(c, base)
        out.append(d)
    return out[::-1]


__all__ = ["Completions", "GenVerdict", "reps_enum", "strong_gen_check", "EPS"]
