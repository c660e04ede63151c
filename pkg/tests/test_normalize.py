import random

from hypothesis import given, settings

from conftest import terms
from jtalg.kernel import closure_min_mults, term_to_tuple
from jtalg.normalize import is_normal, normalize, normalize_with
from jtalg.proofs import check_derivation
from jtalg.terms import is_mu_term, mult_count, parse, random_term, render


def nf(text):
    return render(normalize(parse(text))[0])


def test_axiom_orientations():
    assert nf("l((x*y))") == "x"
    assert nf("r((x*y))") == "y"
    assert nf("(l(z)*r(z))") == "z"


def test_nested_example():
    assert nf("r(l(((x*(y*z))*w)))") == "(y*z)"


def test_derivations_replay(rng):
    for _ in range(150):
        t = random_term(rng, 10)
        result, deriv = normalize(t)
        assert deriv.start == t and deriv.end == result
        assert check_derivation(deriv)
        assert all(s.rule != "hyp" and s.rule != "inst" for s in deriv.steps)


@given(terms)
@settings(max_examples=150)
def test_normal_forms_are_mu_terms(t):
    result, _ = normalize(t)
    assert is_mu_term(result)
    assert is_normal(result)


@given(terms)
@settings(max_examples=150)
def test_idempotent(t):
    result, _ = normalize(t)
    again, deriv = normalize(result)
    assert again == result
    assert deriv.steps == ()


@given(terms)
@settings(max_examples=150)
def test_strategy_independence(t):
    inner, _ = normalize_with(t, "innermost")
    outer, _ = normalize_with(t, "outermost")
    assert inner == outer


@given(terms)
@settings(max_examples=150)
def test_never_increases_mult_count(t):
    result, _ = normalize(t)
    assert mult_count(result) <= mult_count(t)


def test_minimality_against_closure_oracle():
    rng = random.Random(4242)
    for _ in range(120):
        t = random_term(rng, 8)
        result, _ = normalize(t)
        assert closure_min_mults(term_to_tuple(t), 16) == mult_count(result), render(t)
