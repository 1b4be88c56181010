"""Shared fixtures data, random generators and hypothesis strategies."""
from __future__ import annotations

import itertools
import random
from importlib import resources
from pathlib import Path

import numpy as np
from hypothesis import strategies as st

from neutrosophic.interval import UnitInterval
from neutrosophic.ins import InsSet, InsTriple, SampledInsSet
from neutrosophic.nrdm.relation import ConfidencePair, NeutroRelation, Scheme

DEMOS = Path(str(resources.files("neutrosophic") / "demos"))

# Grades on a 1/16 grid: sums, 1 - x and products of up to three grades
# are exact in binary floating point, so laws can be checked with ==.
GRID = 16

X5 = ("x1", "x2", "x3", "x4", "x5")


def iv(a, b=None) -> UnitInterval:
    return UnitInterval(a, a if b is None else b)


def tri(t, i, f) -> InsTriple:
    return InsTriple.of(t, i, f)


# Example sets A and B over x1..x3 from the worked example.
EX_A = InsSet({
    "x1": tri((0.2, 0.4), (0.3, 0.5), (0.3, 0.5)),
    "x2": tri((0.5, 0.7), (0.0, 0.2), (0.2, 0.3)),
    "x3": tri((0.6, 0.8), (0.2, 0.3), (0.2, 0.3)),
})
EX_B = InsSet({
    "x1": tri((0.5, 0.7), (0.1, 0.3), (0.1, 0.3)),
    "x2": tri((0.2, 0.3), (0.2, 0.4), (0.5, 0.8)),
    "x3": tri((0.4, 0.6), (0.0, 0.1), (0.3, 0.4)),
})


# -- seeded random generators ----------------------------------------------

def rand_interval(rng: random.Random, grid: int = GRID) -> UnitInterval:
    a, b = rng.randint(0, grid) / grid, rng.randint(0, grid) / grid
    return UnitInterval(min(a, b), max(a, b))


def rand_triple(rng: random.Random, grid: int = GRID) -> InsTriple:
    return InsTriple(rand_interval(rng, grid), rand_interval(rng, grid), rand_interval(rng, grid))


def rand_set(rng: random.Random, universe=X5, grid: int = GRID) -> InsSet:
    return InsSet({x: rand_triple(rng, grid) for x in universe}, universe)


def rand_pair(rng: random.Random, k: int = 20, consistent: bool = False) -> tuple:
    b = rng.randint(0, k)
    d = rng.randint(0, k - b) if consistent else rng.randint(0, k)
    return b / k, d / k


def rand_relation(rng: random.Random, scheme: Scheme, k: int = 4, consistent: bool = True,
                  density: float = 0.7) -> NeutroRelation:
    rows = {}
    for t in scheme.tau():
        if rng.random() < density:
            rows[t] = rand_pair(rng, k, consistent)
    return NeutroRelation(scheme, rows)


def rand_convex_curve(rng: random.Random, m: int, peak: bool, strict: bool) -> np.ndarray:
    """Unimodal sequence (peak) or valley on m points, values in [0, 1]."""
    p = rng.randrange(m)
    lo = 1 if strict else 0
    steps = [rng.randint(lo, 3) for _ in range(m)]
    vals = np.zeros(m)
    for i in range(p - 1, -1, -1):
        vals[i] = vals[i + 1] - steps[i]
    for i in range(p + 1, m):
        vals[i] = vals[i - 1] - steps[i]
    vals -= vals.min()
    top = vals.max() or 1.0
    vals = vals / top * rng.uniform(0.3, 1.0)
    return vals if peak else 1.0 - vals


def rand_convex_set(rng: random.Random, m: int = 33, strict: bool = False) -> SampledInsSet:
    grid = np.linspace(0.0, 1.0, m)
    cols = []
    for peak in (True, False, False):
        sup = rand_convex_curve(rng, m, peak, strict)
        # a positive multiple keeps the peak/valley shape (and strictness)
        cols += [sup * rng.uniform(0.2, 1.0), sup]
    return SampledInsSet(grid, np.stack(cols, axis=1))


# -- hypothesis strategies --------------------------------------------------

grades = st.integers(0, GRID).map(lambda n: n / GRID)


@st.composite
def intervals(draw):
    a, b = draw(grades), draw(grades)
    return UnitInterval(min(a, b), max(a, b))


@st.composite
def triples(draw):
    return InsTriple(draw(intervals()), draw(intervals()), draw(intervals()))


def ins_sets(universe=X5):
    return st.tuples(*[triples() for _ in universe]).map(lambda ts: InsSet(dict(zip(universe, ts)), universe))


@st.composite
def pairs(draw, consistent=False):
    k = 20
    b = draw(st.integers(0, k))
    d = draw(st.integers(0, k - b if consistent else k))
    return ConfidencePair(b / k, d / k)


def all_tuples(*domains):
    return list(itertools.product(*domains))


# criterion number -> one-line acceptance summary, filled by test_acceptance
ACCEPTANCE: dict[int, str] = {}
