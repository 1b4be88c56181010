import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from neutrosophic import logic as L
from neutrosophic.errors import DomainError, EvaluationError, ParseError
from neutrosophic.ins import InsTriple

from support import triples

P = InsTriple.of(0.5, 0.4, 0.7)
Q = InsTriple.of(1, 0.7, 0.2)
F = L.parse_formula


def value(text, **interp):
    return L.eval_prop(F(text), interp)


def example_model():
    return L.FiniteModel((1, 2, 3), {"p": {
        (1,): InsTriple.of(0.5, 1, 0.4),
        (2,): InsTriple.of(1, 0.2, 0),
        (3,): InsTriple.of(0.7, 0.4, 0.7),
    }})


def test_negation_golden():
    assert value("(not p)", p=P).close_to(InsTriple.of(0.7, 0.6, 0.5))


def test_contradiction_follows_connective_table():
    # the worked example prints <0.5,0.4,0.7>; the connective table gives I = max(0.4, 0.6)
    assert value("(and p (not p))", p=P).close_to(InsTriple.of(0.5, 0.6, 0.7))


def test_implication_follows_connective_table():
    # not <1,1,0>: the table gives I = max(0, 0.7 - 0.4)
    assert value("(implies p q)", p=P, q=Q).close_to(InsTriple.of(1, 0.3, 0))


def test_quantifier_golden():
    m = example_model()
    assert L.eval_pred(F("(forall x (p x))"), m) == InsTriple.of(0.5, 0.2, 0.7)
    assert L.eval_pred(F("(exists x (p x))"), m) == InsTriple.of(1, 1, 0)


def test_singleton_quantification():
    m = L.FiniteModel(("d",), {"p": {("d",): P}})
    assert L.eval_pred(F("(forall x (p x))"), m) == P
    assert L.eval_pred(F("(exists x (p x))"), m) == P


def test_iff_desugars():
    assert value("(iff p q)", p=P, q=Q) == value("(and (implies p q) (implies q p))", p=P, q=Q)


@pytest.mark.parametrize("text", ["(implies p p)", "true", "(implies p (or p q))"])
def test_tautologies_survive_sampling(text):
    v = L.check_tautology(F(text), samples=1000, seed=1)
    assert v.holds and v.samples > 1000


@pytest.mark.parametrize("text", ["(or p (not p))", "(not (and p (not p)))"])
def test_excluded_middle_fails(text):
    v = L.check_tautology(F(text), samples=1000, seed=1)
    assert v.falsified


def test_excluded_middle_counterexample_is_the_half_corner():
    v = L.check_tautology(F("(or p (not p))"))
    half = InsTriple.of(0.5, 0.5, 0.5)
    assert v.counterexample == {"p": half} and v.value == half


def test_interval_sampling_falsifies_self_implication():
    # with proper intervals 1 - t + t is no longer the point 1
    assert L.check_tautology(F("(implies p p)"), sampling="interval").falsified


def test_designated_value_depends_on_convention():
    assert L.check_tautology(F("true"), L.PREDICATE).holds
    assert L.eval_prop(F("true"), {}, L.PREDICATE) == InsTriple.of(1, 1, 0)
    with pytest.raises(DomainError):
        L.DesignatedConvention("bad", L.PROPOSITIONAL.truth, L.PROPOSITIONAL.truth)


@pytest.mark.parametrize("f,g", [
    ("(not (not p))", "p"),
    ("(not (and p q))", "(or (not p) (not q))"),
    ("(not (or p q))", "(and (not p) (not q))"),
])
def test_equivalences_hold(f, g):
    assert L.check_equivalence(F(f), F(g), samples=1000, seed=2).holds
    assert L.check_equivalence(F(f), F(g), samples=300, seed=2, sampling="interval").holds


def test_material_implication_is_not_equivalent():
    v = L.check_equivalence(F("(or (not p) q)"), F("(implies p q)"), samples=1000, seed=3)
    assert v.falsified and v.value != v.other_value


def test_checks_are_deterministic():
    a = L.check_tautology(F("(or p (and q (not r)))"), seed=5, sampling="interval")
    b = L.check_tautology(F("(or p (and q (not r)))"), seed=5, sampling="interval")
    assert a == b


@pytest.mark.parametrize("n", [1, 2, 3, 4, 19, 20, 21, 22])
def test_quantifier_schemes_hold(n):
    assert L.check_schema_identity(n, trials=100, seed=n).holds


def test_scheme_9_fails_on_indeterminacy():
    p = {(1,): InsTriple.of(0.5, 0, 0.5), (2,): InsTriple.of(0.5, 1, 0.5)}
    q = {(1,): InsTriple.of(0.5, 1, 0.5), (2,): InsTriple.of(0.5, 0, 0.5)}
    m = L.FiniteModel((1, 2), {"p": p, "q": q})
    s = L.SCHEMES[9]
    lhs, rhs = L.eval_pred(F(s.lhs), m), L.eval_pred(F(s.rhs), m)
    assert lhs.i.inf == 1 and rhs.i.inf == 0
    assert not L.check_schema_identity(9).holds


def test_unknown_scheme():
    with pytest.raises(KeyError):
        L.check_schema_identity(23)


@given(triples(), triples(), triples())
def test_formula_lattice_laws(p, q, r):
    m = {"p": p, "q": q, "r": r}
    ev = lambda t: L.eval_prop(F(t), m)
    assert ev("(and p q)") == ev("(and q p)")
    assert ev("(or p q)") == ev("(or q p)")
    assert ev("(and p (and q r))") == ev("(and (and p q) r)")
    assert ev("(or p (or q r))") == ev("(or (or p q) r)")
    assert ev("(and p (or q r))") == ev("(or (and p q) (and p r))")
    assert ev("(or p (and q r))") == ev("(and (or p q) (or p r))")


@given(triples(), triples())
def test_semantic_modus_ponens(p, q):
    top = L.PROPOSITIONAL.truth
    for pv in (p, top):
        m = {"p": pv, "q": q}
        if L.eval_prop(F("p"), m) == top and L.eval_prop(F("(implies p q)"), m) == top:
            assert L.eval_prop(F("q"), m) == top


def test_modus_ponens_premises_reachable():
    # guard against the property above being vacuous
    m = {"p": L.PROPOSITIONAL.truth, "q": L.PROPOSITIONAL.truth}
    assert L.eval_prop(F("(implies p q)"), m) == L.PROPOSITIONAL.truth


@given(st.integers(0, 10_000))
def test_quantifier_de_morgan_on_random_models(seed):
    rng = random.Random(seed)
    m = L.random_model(rng, {"p": 1}, max_size=4)
    ev = lambda t: L.eval_pred(F(t), m)
    assert ev("(not (exists x (not (p x))))") == ev("(forall x (p x))")
    assert ev("(not (forall x (p x)))") == ev("(exists x (not (p x)))")


def test_grounding_agrees_with_propositional_evaluation():
    rng = random.Random(7)
    text = "(implies (and (p a) (not (r a b))) (or (p b) (r b a)))"
    for _ in range(50):
        m = L.random_model(rng, {"p": 1, "r": 2}, min_size=2, max_size=3)
        m = L.FiniteModel(m.domain, m.predicates, {"a": m.domain[0], "b": m.domain[-1]})
        prop, interp = L.ground(F(text), m)
        assert L.eval_prop(prop, interp) == L.eval_pred(F(text), m)


def test_function_symbols():
    m = L.FiniteModel((1, 2), {"p": {(1,): P, (2,): Q}}, {"c": 1}, {"succ": {(1,): 2, (2,): 1}})
    assert L.eval_pred(F("(p (succ c))"), m) == Q


def test_evaluation_errors():
    with pytest.raises(EvaluationError):
        L.eval_prop(F("(and p q)"), {"p": P})
    m = example_model()
    with pytest.raises(EvaluationError):
        L.eval_pred(F("(p x)"), m)
    with pytest.raises(EvaluationError):
        L.eval_pred(F("(forall x (p x x))"), m)


def test_parse_errors():
    for bad in ["(and p", "(not p q)", "(forall (p x))", ")"]:
        with pytest.raises(ParseError):
            F(bad)


@pytest.mark.parametrize("text", [
    "(and p (not q))",
    "(forall x (implies (p x) (exists y (q x y))))",
    "(iff (or p q) (not r))",
    "(p (f a) b)",
])
def test_sexpr_round_trip(text):
    assert L.to_sexpr(F(text)) == text
    assert F(L.to_sexpr(F(text))) == F(text)


def test_model_file():
    m = L.FiniteModel.from_text("""
        domain: 1, 2
        const a = 1
        pred p(1) = <[0.5,0.5],[1,1],[0.4,0.4]>
        pred p(2) = <1,0.2,0>
    """)
    assert L.eval_pred(F("(p a)"), m) == InsTriple.of(0.5, 1, 0.4)
    with pytest.raises(DomainError):
        L.FiniteModel.from_text("domain: 1, 2\npred p(1) = <1,0,0>\n")


def test_nary_connectives_fold_left():
    assert F("(and p q r)") == F("(and (and p q) r)")
