import random

import numpy as np
import pytest

from neutrosophic import inls
from neutrosophic.errors import DomainError, NoOutputError, NoRuleFired, ParseError
from neutrosophic.ins import InsTriple
from neutrosophic.inls import (
    EngineConfig,
    IntervalMF,
    LinguisticTriple,
    Rule,
    Rulebase,
    Trapezoid,
    Variable,
)

from support import DEMOS

TWO_RULES = (DEMOS / "inls" / "two_rules.rules").read_text()


def crisp_term(t, i, f, name=""):
    return LinguisticTriple(IntervalMF.crisp(t), IntervalMF.crisp(i), IntervalMF.crisp(f), name)


def const(v, lo=0.0, hi=10.0):
    return Trapezoid(lo, lo, hi, hi, v)


# -- an independent scalar oracle for the demo rulebase ----------------------

def trap(x, a, b, c, d, h=1.0):
    if b <= x <= c:
        return h
    if a < x < b:
        return h * (x - a) / (b - a)
    if c < x < d:
        return h * (d - x) / (d - c)
    return 0.0


def demo_oracle(x1, x2, n=20001):
    """Hand-transcribed rulebase, evaluated pointwise in plain Python."""
    def rng(lo_fn, hi_fn, x):
        return lo_fn(x), hi_fn(x)

    low = [rng(lambda x: trap(x, 0, 0, 2, 6), lambda x: trap(x, 0, 0, 3, 7), x1), (0.1, 0.1),
           (trap(x1, 4, 8, 10, 10),) * 2]
    small = [(trap(x2, 0, 0, 3, 7),) * 2, (0.05, 0.15), (trap(x2, 3, 7, 10, 10),) * 2]
    high = [(trap(x1, 4, 8, 10, 10),) * 2, (0.1, 0.1), (trap(x1, 0, 0, 2, 6),) * 2]
    large = [(trap(x2, 3, 7, 10, 10),) * 2, (0.0, 0.0), (trap(x2, 0, 0, 3, 7),) * 2]

    def strength(a, b):
        t = (min(a[0][0], b[0][0]), min(a[0][1], b[0][1]))
        i = (max(a[1][0], b[1][0]), max(a[1][1], b[1][1]))
        f = (max(a[2][0], b[2][0]), max(a[2][1], b[2][1]))
        return t, i, f

    g1, g2 = strength(low, small), strength(high, large)

    def cheap(y):
        return [(trap(y, 0, 2, 3, 6), trap(y, 0, 1, 4, 7)), (trap(y, 0, 2, 3, 6, 0.2),) * 2,
                (trap(y, 4, 7, 10, 10),) * 2]

    def dear(y):
        return [(trap(y, 4, 6, 7, 9),) * 2, (0.1, 0.1), (trap(y, 0, 0, 4, 6), trap(y, 0, 0, 5, 7))]

    def clip(g, c):
        return [tuple(min(g[0][k], c[0][k]) for k in (0, 1)),
                tuple(max(g[1][k], c[1][k]) for k in (0, 1)),
                tuple(max(g[2][k], c[2][k]) for k in (0, 1))]

    fired = [(g, cons) for g, cons in ((g1, cheap), (g2, dear)) if g[0][1] > 0]
    ys, zs = [], []
    for j in range(n):
        y = 10.0 * j / (n - 1)
        outs = [clip(g, cons(y)) for g, cons in fired]
        t = [max(o[0][k] for o in outs) for k in (0, 1)]
        i = [min(o[1][k] for o in outs) for k in (0, 1)]
        f = [min(o[2][k] for o in outs) for k in (0, 1)]
        tm, im, fm = sum(t) / 2, sum(i) / 2, sum(f) / 2
        ys.append(y)
        zs.append(0.5 * tm + 0.35 * (1 - fm) + 0.1 * im / 2 + 0.05 * (1 - im / 2))
    num = sum((zs[j] * ys[j] + zs[j + 1] * ys[j + 1]) for j in range(n - 1))
    den = sum((zs[j] + zs[j + 1]) for j in range(n - 1))
    return num / den


def test_demo_rulebase_golden():
    rb = inls.parse_rulebase(TWO_RULES)
    out = inls.run_inference(rb, {"x1": 4.5, "x2": 5}).output
    assert out == pytest.approx(4.48322569, abs=1e-8)
    assert out == pytest.approx(demo_oracle(4.5, 5), abs=1e-3)


@pytest.mark.parametrize("x1,x2", [(1, 1), (3, 6), (8, 9), (5.5, 2)])
def test_demo_rulebase_matches_oracle(x1, x2):
    rb = inls.parse_rulebase(TWO_RULES)
    assert inls.run_inference(rb, [x1, x2]).output == pytest.approx(demo_oracle(x1, x2, 4001), abs=1e-3)


def test_grid_doubling_is_stable():
    rb = inls.parse_rulebase(TWO_RULES)
    for x in [(4.5, 5), (3, 4), (6, 6)]:
        a = inls.run_inference(rb, x, EngineConfig(resolution=1001)).output
        b = inls.run_inference(rb, x, EngineConfig(resolution=2001)).output
        assert abs(a - b) < 1e-3


def single_rule_engine(center=5.0, width=2.0):
    x = Variable("x", 0, 10)
    y = Variable("y", 0, 10)
    ante = crisp_term(Trapezoid(0, 4, 6, 10), const(0.1), Trapezoid(0, 0, 1, 4))
    cons = crisp_term(Trapezoid(center - 2 * width, center - width, center + width, center + 2 * width),
                      const(0.2), const(0.0))
    return Rulebase((x,), y, (Rule((ante,), cons, "r"),))


def test_symmetric_single_rule_returns_center():
    rb = single_rule_engine()
    for x in (3, 5, 6.5):
        assert inls.run_inference(rb, [x]).output == pytest.approx(5.0, abs=1e-6)


def test_synthesis_formula():
    rng = np.random.default_rng(11)
    curves = rng.random((20, 3))
    got = inls.synthesize(curves, EngineConfig())
    t, i, f = curves.T
    want = 0.5 * t + 0.35 * (1 - f) + 0.025 * i + 0.05
    assert np.max(np.abs(got - want)) < 1e-12


def test_type_reduction_is_midpoint():
    b = np.array([[0.2, 0.4, 0.0, 0.1, 0.5, 0.9]])
    assert np.allclose(inls.type_reduce(b), [[0.3, 0.05, 0.7]])


def test_weights_validated():
    for w in [(0.5, 0.5, 0.1, 0.0), (1.2, -0.2, 0, 0), (1, 0, 0)]:
        with pytest.raises(DomainError):
            EngineConfig(weights=w)


def test_trapezoid_ramps():
    tr = Trapezoid(1, 3, 5, 9, 0.8)
    xs = np.array([0, 1, 2, 3, 4, 5, 7, 9, 10])
    assert np.allclose(tr(xs), [0, 0, 0.4, 0.8, 0.8, 0.8, 0.4, 0, 0])
    # degenerate shoulders keep the plateau value at the edge
    assert Trapezoid(0, 0, 2, 4)(0.0) == 1.0
    with pytest.raises(DomainError):
        Trapezoid(2, 1, 3, 4)


def test_interval_mf_rejects_crossed_surfaces():
    mf = IntervalMF(Trapezoid(0, 1, 2, 3), Trapezoid(0, 1, 1.5, 2))
    with pytest.raises(DomainError):
        mf(np.array([1.8]))


def test_antecedent_and_fold():
    a = InsTriple.of((0.2, 0.6), (0.1, 0.3), (0.4, 0.5))
    b = InsTriple.of((0.4, 0.5), (0.2, 0.2), (0.1, 0.7))
    assert inls.antecedent_combine([a, b]) == InsTriple.of((0.2, 0.5), (0.2, 0.3), (0.4, 0.7))
    assert inls.antecedent_combine([a]) == a


def test_fire_and_aggregate_folds():
    rng = random.Random(3)
    ygrid = np.linspace(0, 10, 21)
    cons = crisp_term(Trapezoid(2, 4, 6, 8), const(0.3), Trapezoid(0, 0, 2, 5))
    fired = []
    for _ in range(3):
        vals = sorted(rng.random() for _ in range(2))
        g = InsTriple.of(vals, (0.1, 0.2), (0.0, 0.4))
        out = inls.rule_fire(g, cons, ygrid)
        raw = cons.sample(ygrid)
        assert np.all(out[:, :2] <= raw[:, :2]) and np.all(out[:, :2] <= g.t.sup)
        assert np.all(out[:, 2:] >= raw[:, 2:])
        fired.append(out)
    agg = inls.aggregate(fired)
    stack = np.stack(fired)
    assert np.array_equal(agg[:, :2], stack[:, :, :2].max(axis=0))
    assert np.array_equal(agg[:, 2:], stack[:, :, 2:].min(axis=0))


def test_clipping_is_monotone_in_strength():
    rb = single_rule_engine()
    ygrid = np.linspace(0, 10, 101)
    cons = rb.rules[0].consequent
    prev = None
    for s in np.linspace(0, 1, 11):
        out = inls.rule_fire(InsTriple.of(s, 0, 0), cons, ygrid)
        if prev is not None:
            assert np.all(prev[:, :2] <= out[:, :2])
        prev = out


def test_no_rule_fired():
    rb = single_rule_engine()
    with pytest.raises(NoRuleFired):
        inls.run_inference(rb, [0.0])
    with pytest.raises(NoRuleFired):
        inls.aggregate([])


def test_zero_curve_has_no_centroid():
    with pytest.raises(NoOutputError):
        inls.centroid(np.zeros(11), np.linspace(0, 1, 11))


def test_inputs_out_of_range():
    rb = inls.parse_rulebase(TWO_RULES)
    with pytest.raises(DomainError):
        inls.run_inference(rb, {"x1": 11, "x2": 5})
    with pytest.raises(DomainError):
        inls.run_inference(rb, {"x1": 1})


def test_set_valued_inputs_reduce_to_crisp_for_singletons():
    # a narrow spike around x behaves like the crisp reading of x
    rb = single_rule_engine()
    spike = crisp_term(Trapezoid(4.99, 5, 5, 5.01), const(0.0), Trapezoid(0, 0, 10, 10, 1.0))
    res = inls.run_inference(rb, [spike], EngineConfig(input_mode="set", resolution=2001))
    assert res.output == pytest.approx(5.0, abs=1e-6)
    assert res.rules[0].strength.t.sup == pytest.approx(1.0)


def test_trace_description():
    rb = inls.parse_rulebase(TWO_RULES)
    res = inls.run_inference(rb, [4.5, 5])
    text = res.describe()
    assert "rule r1" in text and "rule r2" in text and "output 4.48322569" in text


@pytest.mark.parametrize("bad", [
    "input x [0, 10]\noutput y [0, 10]\nterm x a T=trap(0,1,2) I=const(0) F=const(0)\n",
    "input x [0, 10]\noutput y [0, 10]\nterm x a T=trap(0,1,2,12) I=const(0) F=const(0)\n",
    "input x [0, 10]\noutput y [0, 10]\nrule r: if x is nowhere then y is z\n",
])
def test_rulebase_parse_errors(bad):
    with pytest.raises((ParseError, DomainError)):
        inls.parse_rulebase(bad)


def test_centroid_of_symmetric_triangle():
    y = np.linspace(0, 10, 1001)
    assert inls.centroid(Trapezoid(2, 5, 5, 8)(y), y) == pytest.approx(5.0, abs=1e-6)


def test_centroid_of_asymmetric_curve_matches_dense_grid():
    shape = Trapezoid(1, 2, 3, 9)
    coarse, dense = np.linspace(0, 10, 1001), np.linspace(0, 10, 10001)
    exact = inls.centroid(shape(dense), dense)
    assert inls.centroid(shape(coarse), coarse) == pytest.approx(exact, abs=1e-3)


def test_output_stays_in_range():
    rb = inls.parse_rulebase(TWO_RULES)
    rng = np.random.default_rng(5)
    for x1, x2 in rng.uniform(0, 10, size=(40, 2)):
        try:
            out = inls.run_inference(rb, [x1, x2], EngineConfig(resolution=201)).output
        except NoRuleFired:
            continue
        assert 0.0 <= out <= 10.0
