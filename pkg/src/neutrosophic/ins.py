"""Interval neutrosophic sets over finite and sampled continuous universes."""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Hashable, Iterable, Mapping

import numpy as np

from . import kernels
from .errors import DomainError, ParseError, UniverseMismatch
from .interval import (
    TOLERANCE,
    UnitInterval,
    iv_add,
    iv_div,
    iv_max,
    iv_min,
    iv_mul,
    iv_one_minus,
    iv_prob_sum,
    iv_scale,
)


@dataclass(frozen=True, slots=True)
class InsTriple:
    """Truth, indeterminacy and falsity membership intervals of one element."""

    t: UnitInterval
    i: UnitInterval
    f: UnitInterval

    @classmethod
    def of(cls, t, i, f) -> "InsTriple":
        """Build from intervals, ``(inf, sup)`` pairs or scalars."""
        return cls(_as_interval(t), _as_interval(i), _as_interval(f))

    @classmethod
    def parse(cls, text: str) -> "InsTriple":
        """Parse ``<[t1,t2],[i1,i2],[f1,f2]>`` (bare numbers allowed)."""
        s = text.strip()
        if not (s.startswith("<") and s.endswith(">")):
            raise ParseError(f"triple must be written <T,I,F>: {text!r}")
        parts = _split_top(s[1:-1])
        if len(parts) != 3:
            raise ParseError(f"triple needs exactly 3 components: {text!r}")
        return cls(*(UnitInterval.parse(p) for p in parts))

    def as_array(self) -> np.ndarray:
        return np.array([self.t.inf, self.t.sup, self.i.inf, self.i.sup, self.f.inf, self.f.sup])

    @classmethod
    def from_array(cls, a) -> "InsTriple":
        return cls(UnitInterval(a[0], a[1]), UnitInterval(a[2], a[3]), UnitInterval(a[4], a[5]))

    def close_to(self, other: "InsTriple", tol: float = TOLERANCE) -> bool:
        return self.t.close_to(other.t, tol) and self.i.close_to(other.i, tol) and self.f.close_to(other.f, tol)

    def __str__(self):
        return f"<{self.t},{self.i},{self.f}>"


def _as_interval(v) -> UnitInterval:
    if isinstance(v, UnitInterval):
        return v
    if isinstance(v, (tuple, list)):
        return UnitInterval(*v)
    return UnitInterval.point(v)


def _split_top(s: str) -> list[str]:
    """Split on commas that are not nested inside brackets."""
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


BOTTOM = InsTriple.of(0.0, 1.0, 1.0)
TOP = InsTriple.of(1.0, 0.0, 0.0)


class ProductKey(tuple):
    """Element of a cartesian-product universe.

    Nested product keys are flattened so the product is associative on
    the nose: ``(x, (y, z))`` and ``((x, y), z)`` both become ``(x, y, z)``.
    """

    __slots__ = ()

    @classmethod
    def join(cls, a, b) -> "ProductKey":
        left = tuple(a) if isinstance(a, ProductKey) else (a,)
        right = tuple(b) if isinstance(b, ProductKey) else (b,)
        return cls(left + right)

    def __str__(self):
        return "(" + ",".join(str(x) for x in self) + ")"


@dataclass(frozen=True)
class InsSet:
    """An interval neutrosophic set over an ordered finite universe.

    Every universe element carries a grade.  Equality ignores universe order.
    """

    universe: tuple
    grades: Mapping[Hashable, InsTriple] = field(repr=False)

    def __init__(self, grades: Mapping[Hashable, InsTriple] | Iterable[tuple], universe: Iterable | None = None):
        g = dict(grades)
        uni = tuple(universe) if universe is not None else tuple(g)
        if len(set(uni)) != len(uni):
            raise DomainError("universe contains duplicate elements")
        if set(uni) != set(g):
            missing = [x for x in uni if x not in g]
            extra = [x for x in g if x not in set(uni)]
            raise DomainError(f"grades do not cover the universe (missing={missing}, extra={extra})")
        for x, v in g.items():
            if not isinstance(v, InsTriple):
                raise DomainError(f"grade of {x!r} is not an InsTriple: {v!r}")
        object.__setattr__(self, "universe", uni)
        object.__setattr__(self, "grades", MappingProxyType({x: g[x] for x in uni}))

    @classmethod
    def constant(cls, universe: Iterable, triple: InsTriple) -> "InsSet":
        uni = tuple(universe)
        return cls({x: triple for x in uni}, uni)

    @classmethod
    def empty(cls, universe: Iterable) -> "InsSet":
        return cls.constant(universe, BOTTOM)

    @classmethod
    def full(cls, universe: Iterable) -> "InsSet":
        return cls.constant(universe, TOP)

    @classmethod
    def from_text(cls, text: str, source: str | None = None) -> "InsSet":
        """Parse lines of ``elem : <[t1,t2],[i1,i2],[f1,f2]>``; ``#`` starts a comment."""
        grades = {}
        for n, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            elem, sep, rest = line.rpartition(":")
            if not sep or not elem.strip():
                raise ParseError("expected 'elem : <T,I,F>'", line=n, source=source)
            elem = elem.strip()
            if elem in grades:
                raise ParseError(f"duplicate element {elem!r}", line=n, source=source)
            try:
                grades[elem] = InsTriple.parse(rest)
            except (ParseError, DomainError) as exc:
                raise ParseError(getattr(exc, "message", str(exc)), line=n, source=source) from None
        return cls(grades)

    def to_text(self) -> str:
        return "".join(f"{x} : {self.grades[x]}\n" for x in self.universe)

    def __getitem__(self, x) -> InsTriple:
        return self.grades[x]

    def __iter__(self):
        return iter(self.universe)

    def __len__(self):
        return len(self.universe)

    def __eq__(self, other):
        if not isinstance(other, InsSet):
            return NotImplemented
        return set(self.universe) == set(other.universe) and all(
            self.grades[x] == other.grades[x] for x in self.universe
        )

    def __hash__(self):
        return hash(frozenset(self.grades.items()))

    def close_to(self, other: "InsSet", tol: float = TOLERANCE) -> bool:
        _check_universe(self, other)
        return all(self.grades[x].close_to(other.grades[x], tol) for x in self.universe)

    def map(self, fn) -> "InsSet":
        return InsSet({x: fn(self.grades[x]) for x in self.universe}, self.universe)

    # operator sugar
    def __invert__(self):
        return ins_complement(self)

    def __and__(self, other):
        return ins_intersect(self, other)

    def __or__(self, other):
        return ins_union(self, other)

    def __sub__(self, other):
        return ins_difference(self, other)

    def __add__(self, other):
        return ins_add(self, other)

    def __mul__(self, other):
        return ins_cartesian_product(self, other)

    def __le__(self, other):
        return ins_contains(self, other)

    def __ge__(self, other):
        return ins_contains(other, self)


def _check_universe(a: InsSet, b: InsSet) -> None:
    if set(a.universe) != set(b.universe):
        raise UniverseMismatch(
            f"universes differ: {sorted(map(str, a.universe))} vs {sorted(map(str, b.universe))}"
        )


def _zip(a: InsSet, b: InsSet, fn) -> InsSet:
    _check_universe(a, b)
    return InsSet({x: fn(a.grades[x], b.grades[x]) for x in a.universe}, a.universe)


# -- pointwise operations -------------------------------------------------

def triple_contains(a: InsTriple, b: InsTriple) -> bool:
    """a is contained in b: a's truth below b's, a's indeterminacy/falsity above b's."""
    return a.t.le(b.t) and b.i.le(a.i) and b.f.le(a.f)


def triple_complement(a: InsTriple) -> InsTriple:
    return InsTriple(a.f, iv_one_minus(a.i), a.t)


def triple_intersect(a: InsTriple, b: InsTriple) -> InsTriple:
    return InsTriple(iv_min(a.t, b.t), iv_max(a.i, b.i), iv_max(a.f, b.f))


def triple_union(a: InsTriple, b: InsTriple) -> InsTriple:
    return InsTriple(iv_max(a.t, b.t), iv_min(a.i, b.i), iv_min(a.f, b.f))


def triple_difference(a: InsTriple, b: InsTriple) -> InsTriple:
    return InsTriple(
        iv_min(a.t, b.f),
        iv_max(a.i, iv_one_minus(b.i)),
        iv_max(a.f, b.t),
    )


def triple_add(a: InsTriple, b: InsTriple) -> InsTriple:
    return InsTriple(iv_add(a.t, b.t), iv_add(a.i, b.i), iv_add(a.f, b.f))


def triple_product(a: InsTriple, b: InsTriple) -> InsTriple:
    """Probabilistic sum on T, endpoint products on I and F."""
    return InsTriple(iv_prob_sum(a.t, b.t), iv_mul(a.i, b.i), iv_mul(a.f, b.f))


def ins_contains(a: InsSet, b: InsSet) -> bool:
    """True when ``a`` is contained in ``b`` (a is a subset of b)."""
    _check_universe(a, b)
    return all(triple_contains(a.grades[x], b.grades[x]) for x in a.universe)


def ins_equal(a: InsSet, b: InsSet) -> bool:
    return ins_contains(a, b) and ins_contains(b, a)


def ins_complement(a: InsSet) -> InsSet:
    return a.map(triple_complement)


def ins_intersect(a: InsSet, b: InsSet) -> InsSet:
    return _zip(a, b, triple_intersect)


def ins_union(a: InsSet, b: InsSet) -> InsSet:
    return _zip(a, b, triple_union)


def ins_difference(a: InsSet, b: InsSet) -> InsSet:
    return _zip(a, b, triple_difference)


def ins_add(a: InsSet, b: InsSet) -> InsSet:
    return _zip(a, b, triple_add)


def ins_cartesian_product(a: InsSet, b: InsSet) -> InsSet:
    """Set over ``a.universe x b.universe`` keyed by flattened :class:`ProductKey`."""
    grades = {}
    for x in a.universe:
        for y in b.universe:
            grades[ProductKey.join(x, y)] = triple_product(a.grades[x], b.grades[y])
    return InsSet(grades)


def ins_scalar_mul(a: InsSet, k: float) -> InsSet:
    return a.map(lambda g: InsTriple(iv_scale(g.t, k), iv_scale(g.i, k), iv_scale(g.f, k)))


def ins_scalar_div(a: InsSet, k: float) -> InsSet:
    return a.map(lambda g: InsTriple(iv_div(g.t, k), iv_div(g.i, k), iv_div(g.f, k)))


def ins_truth_favorite(a: InsSet) -> InsSet:
    """Move indeterminacy into truth: <T+I, 0, F>."""
    return a.map(lambda g: InsTriple(iv_add(g.t, g.i), UnitInterval(0.0, 0.0), g.f))


def ins_false_favorite(a: InsSet) -> InsSet:
    """Move indeterminacy into falsity: <T, 0, F+I>."""
    return a.map(lambda g: InsTriple(g.t, UnitInterval(0.0, 0.0), iv_add(g.f, g.i)))


def ins_is_empty(a: InsSet) -> bool:
    return all(g == BOTTOM for g in a.grades.values())


# -- relations and composition --------------------------------------------

@dataclass(frozen=True)
class InsRelation:
    """Interval neutrosophic relation between finite universes X and Y."""

    dom_x: tuple
    dom_y: tuple
    grades: Mapping[tuple, InsTriple] = field(repr=False)

    def __init__(self, dom_x: Iterable, dom_y: Iterable, grades: Mapping[tuple, InsTriple]):
        dx, dy = tuple(dom_x), tuple(dom_y)
        g = dict(grades)
        want = {(x, y) for x in dx for y in dy}
        if set(g) != want:
            raise DomainError("relation grades must cover every (x, y) pair exactly")
        object.__setattr__(self, "dom_x", dx)
        object.__setattr__(self, "dom_y", dy)
        object.__setattr__(self, "grades", MappingProxyType(g))

    @classmethod
    def identity(cls, dom: Iterable) -> "InsRelation":
        """Unit for composition: T and I are 1 on the diagonal and 0 off it; F the opposite."""
        d = tuple(dom)
        on = InsTriple.of(1.0, 1.0, 0.0)
        off = InsTriple.of(0.0, 0.0, 1.0)
        return cls(d, d, {(x, y): (on if x == y else off) for x in d for y in d})

    def as_array(self) -> np.ndarray:
        out = np.empty((len(self.dom_x), len(self.dom_y), 6))
        for i, x in enumerate(self.dom_x):
            for j, y in enumerate(self.dom_y):
                out[i, j] = self.grades[(x, y)].as_array()
        return out

    @classmethod
    def from_array(cls, dom_x, dom_y, arr) -> "InsRelation":
        return cls(dom_x, dom_y, {
            (x, y): InsTriple.from_array(arr[i, j])
            for i, x in enumerate(dom_x) for j, y in enumerate(dom_y)
        })

    def __getitem__(self, key) -> InsTriple:
        return self.grades[key]


def ins_compose(r: InsRelation, s: InsRelation) -> InsRelation:
    """sup-min composition on T and I, inf-max on F, endpoint-wise."""
    if set(r.dom_y) != set(s.dom_x):
        raise UniverseMismatch("inner universes of the composed relations differ")
    s_arr = InsRelation(r.dom_y, s.dom_y, s.grades).as_array()
    return InsRelation.from_array(r.dom_x, s.dom_y, kernels.compose(r.as_array(), s_arr))


def ins_apply(a: InsSet, s: InsRelation) -> InsSet:
    """Image of set ``a`` (on X) through relation ``s`` (on X x Z)."""
    _check_universe(a, InsSet({x: BOTTOM for x in s.dom_x}))
    a_arr = np.array([[a.grades[x].as_array() for x in s.dom_x]])
    out = kernels.compose(a_arr, s.as_array())[0]
    return InsSet({z: InsTriple.from_array(out[j]) for j, z in enumerate(s.dom_y)}, s.dom_y)


# -- sampled continuous universes -----------------------------------------

class SampledInsSet:
    """Interval neutrosophic set on a uniform grid over a real interval.

    ``values`` is an (m, 6) array of (t_inf, t_sup, i_inf, i_sup, f_inf, f_sup).
    """

    __slots__ = ("grid", "values")

    def __init__(self, grid, values):
        grid = np.asarray(grid, dtype=np.float64)
        values = np.asarray(values, dtype=np.float64)
        if grid.ndim != 1 or grid.size < 2:
            raise DomainError("grid must be one-dimensional with at least 2 points")
        steps = np.diff(grid)
        if np.any(steps <= 0) or not np.allclose(steps, steps[0], rtol=1e-9, atol=1e-12):
            raise DomainError("grid must be strictly increasing and uniform")
        if values.shape != (grid.size, 6):
            raise DomainError(f"values must have shape ({grid.size}, 6), got {values.shape}")
        if not np.all(np.isfinite(values)) or values.min() < 0 or values.max() > 1:
            raise DomainError("membership values must lie in [0, 1]")
        if np.any(values[:, 0::2] > values[:, 1::2]):
            raise DomainError("every interval needs inf <= sup")
        self.grid = grid
        self.values = values

    @classmethod
    def from_functions(cls, grid, fn) -> "SampledInsSet":
        """Sample ``fn(x) -> InsTriple`` on each grid point."""
        grid = np.asarray(grid, dtype=np.float64)
        return cls(grid, np.array([fn(x).as_array() for x in grid]))

    def __len__(self):
        return self.grid.size

    def at(self, k: int) -> InsTriple:
        return InsTriple.from_array(self.values[k])

    def _check_grid(self, other: "SampledInsSet"):
        if self.grid.shape != other.grid.shape or not np.array_equal(self.grid, other.grid):
            raise UniverseMismatch("sampled sets live on different grids")

    def intersect(self, other: "SampledInsSet") -> "SampledInsSet":
        self._check_grid(other)
        a, b = self.values, other.values
        return SampledInsSet(self.grid, np.concatenate([np.minimum(a[:, :2], b[:, :2]), np.maximum(a[:, 2:], b[:, 2:])], axis=1))

    def union(self, other: "SampledInsSet") -> "SampledInsSet":
        self._check_grid(other)
        a, b = self.values, other.values
        return SampledInsSet(self.grid, np.concatenate([np.maximum(a[:, :2], b[:, :2]), np.minimum(a[:, 2:], b[:, 2:])], axis=1))


def ins_is_convex(a: SampledInsSet, strict: bool = False) -> bool:
    """Grid convexity: truth endpoints quasi-concave, I and F endpoints quasi-convex.

    Checked for every grid triple i < k < j; ``strict`` demands strict
    inequalities (strong convexity).
    """
    if len(a) < 3:
        raise DomainError("convexity needs a grid of at least 3 points")
    return kernels.grid_convex(a.values, strict)

