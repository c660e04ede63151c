import pytest
from hypothesis import given

from conftest import terms
from jtalg.proofs import (Derivation, Step, check_derivation, concat,
                          derivation_from_json, derivation_to_json,
                          instantiate, reverse, shift)
from jtalg.terms import Identity, Var, parse, parse_identity, substitute


def d(start, steps, end):
    return Derivation(parse(start), tuple(steps), parse(end))


def test_one_step_axiom():
    ok = check_derivation(d("l((x*y))", [Step((), "eps_l", "fwd")], "x"))
    assert ok and ok.step_index is None


def test_position_mismatch_fails_at_step_zero():
    bad = check_derivation(d("l((x*y))", [Step(("l",), "eps_l", "fwd")], "x"))
    assert not bad
    assert bad.step_index == 0


def test_wrong_end_detected():
    bad = check_derivation(d("l((x*y))", [Step((), "eps_l", "fwd")], "y"))
    assert not bad
    assert bad.step_index == 1
    assert "replay ends at" in bad.reason


def test_backward_erasing_step_needs_substitution():
    ambiguous = check_derivation(d("x", [Step((), "eps_l", "bwd")], "l((x*y))"))
    assert not ambiguous
    assert "substitution" in ambiguous.reason
    ok = check_derivation(
        d("x", [Step((), "eps_l", "bwd", {"x": Var("x"), "y": Var("y")})], "l((x*y))"))
    assert ok


def test_explicit_substitution_is_validated():
    bad = check_derivation(
        d("l((x*y))", [Step((), "eps_l", "fwd", {"x": Var("q"), "y": Var("y")})], "q"))
    assert not bad
    assert "does not match" in bad.reason


def test_non_linear_axiom_instance():
    assert check_derivation(d("(l(r(a))*r(r(a)))", [Step((), "eps_mul", "fwd")], "r(a)"))
    assert not check_derivation(d("(l(a)*r(b))", [Step((), "eps_mul", "fwd")], "a"))


def test_hypothesis_steps():
    hyp = parse_identity("(x*y) = (y*x)")
    w = d("(a*b)", [Step((), "hyp", "fwd")], "(b*a)")
    assert not check_derivation(w)          # no hypothesis supplied
    assert check_derivation(w, hyp)
    # backward use swaps the sides
    back = d("(b*a)", [Step((), "hyp", "bwd")], "(a*b)")
    assert check_derivation(back, hyp)


def test_hypothesis_with_fresh_rhs_variable_needs_substitution():
    hyp = parse_identity("(x*y) = z")
    w = d("(a*b)", [Step((), "hyp", "fwd")], "c")
    assert not check_derivation(w, hyp)
    w2 = d("(a*b)", [Step((), "hyp", "fwd",
                          {"x": Var("a"), "y": Var("b"), "z": Var("c")})], "c")
    assert check_derivation(w2, hyp)


def test_instantiate_step():
    w = d("l((x*y))", [Step((), "eps_l", "fwd"),
                       Step((), "inst", "fwd", {"x": parse("(u*v)")})], "(u*v)")
    assert check_derivation(w)
    # instantiate must be global
    bad = d("l((x*y))", [Step(("l",), "inst", "fwd", {"x": Var("u")})], "l((u*y))")
    assert not check_derivation(bad)
    missing = d("x", [Step((), "inst", "fwd")], "x")
    assert not check_derivation(missing)


def test_reverse_and_concat():
    fwd = d("l((x*y))", [Step((), "eps_l", "fwd", {"x": Var("x"), "y": Var("y")})], "x")
    back = reverse(fwd)
    assert check_derivation(back)
    both = concat(fwd, back)
    assert both.start == both.end
    assert check_derivation(both)
    with pytest.raises(ValueError):
        concat(fwd, fwd)


def test_shift_and_instantiate():
    base = d("l((x*y))", [Step((), "eps_l", "fwd", {"x": Var("x"), "y": Var("y")})], "x")
    lifted = Derivation(parse("r(l((x*y)))"), shift(base.steps, ("r",)), parse("r(x)"))
    assert check_derivation(lifted)
    sigma = {"x": parse("(a*b)"), "y": parse("l(c)")}
    inst = instantiate(base, sigma)
    assert inst.start == substitute(base.start, sigma)
    assert check_derivation(inst)


@given(terms)
def test_instantiate_preserves_validity(t):
    base = d("l((x*y))", [Step((), "eps_l", "fwd", {"x": Var("x"), "y": Var("y")})], "x")
    inst = instantiate(base, {"x": t})
    assert check_derivation(inst)
    assert inst.end == t


def test_json_roundtrip():
    w = d("x", [Step((), "eps_l", "bwd", {"x": Var("x"), "y": parse("(u*v)")}),
                Step((), "inst", "fwd", {"u": Var("w_1")})],
          "l((x*(w_1*v)))")
    assert check_derivation(w)
    obj = derivation_to_json(w)
    assert obj["steps"][0]["subst"] == {"x": "x", "y": "(u*v)"}
    again = derivation_from_json(obj)
    assert again == w


def test_json_reserved_names_accepted():
    obj = {"start": "x",
           "steps": [{"pos": [], "rule": "hyp", "dir": "fwd",
                      "subst": {"x": "x", "y": "$0"}}],
           "end": "$0"}
    w = derivation_from_json(obj)
    assert check_derivation(w, Identity(Var("x"), Var("y")))
