import pytest
from hypothesis import given

from conftest import terms
from jtalg.terms import (Identity, L, Mul, ParseError, R, Var, is_mu_term,
                         match, mult_count, parse, parse_identity, positions,
                         random_term, render, render_identity, replace_at,
                         substitute, subterm_at, term_size, term_vars,
                         unary_view)


def test_parse_examples():
    assert parse("l((x*y))") == L(Mul(Var("x"), Var("y")))
    assert parse("(l(z)*r(z))") == Mul(L(Var("z")), R(Var("z")))
    assert parse("r(l(z))") == R(L(Var("z")))
    assert parse("  l ( x )  ") == L(Var("x"))


def test_parse_error_offsets():
    with pytest.raises(ParseError) as e:
        parse("l(x")
    assert e.value.offset == 3
    with pytest.raises(ParseError):
        parse("(x*y")
    with pytest.raises(ParseError):
        parse("x)")
    with pytest.raises(ParseError):
        parse("x*y")
    with pytest.raises(ParseError):
        parse("")
    with pytest.raises(ParseError):
        parse("l")


def test_reserved_names():
    with pytest.raises(ParseError):
        parse("$0")
    assert parse("$0", allow_reserved_names=True) == Var("$0")
    # l and r are operators, never variables
    with pytest.raises(ParseError):
        parse("(l*r)")


def test_render_examples():
    assert render(L(Var("x"))) == "l(x)"
    assert render(Mul(Var("x"), Var("y"))) == "(x*y)"
    assert render(R(L(Var("z")))) == "r(l(z))"


@given(terms)
def test_parse_render_roundtrip(t):
    assert parse(render(t)) == t


def test_parse_identity():
    ident = parse_identity("l((x*y)) = x")
    assert ident == Identity(L(Mul(Var("x"), Var("y"))), Var("x"))
    assert render_identity(ident) == "l((x*y)) = x"
    with pytest.raises(ParseError):
        parse_identity("x = ")
    with pytest.raises(ParseError):
        parse_identity("x")


def test_is_mu_term():
    assert is_mu_term(parse("(l(x)*r(y))"))
    assert not is_mu_term(parse("l((x*y))"))
    assert is_mu_term(parse("x"))
    assert is_mu_term(parse("((x*l(l(y)))*z)"))
    assert not is_mu_term(parse("(x*l((y*z)))"))


def test_mult_count():
    assert mult_count(parse("x")) == 0
    assert mult_count(parse("(x*y)")) == 1
    assert mult_count(parse("((x*y)*l(z))")) == 2


def test_positions_and_paths():
    t = parse("(l(x)*r(y))")
    paths = dict(positions(t))
    assert paths[()] == t
    assert paths[("left", "l")] == Var("x")
    assert subterm_at(t, ("right",)) == R(Var("y"))
    assert subterm_at(t, ("right", "l")) is None
    assert replace_at(t, ("left",), Var("q")) == parse("(q*r(y))")
    with pytest.raises(ValueError):
        replace_at(t, ("l",), Var("q"))


def test_match_and_substitute():
    pat = parse("l((x*y))")
    got = match(pat, parse("l((r(a)*b))"))
    assert got == {"x": R(Var("a")), "y": Var("b")}
    assert match(pat, parse("l(a)")) is None
    # repeated pattern variables must agree
    pat2 = parse("(l(z)*r(z))")
    assert match(pat2, parse("(l(a)*r(a))")) == {"z": Var("a")}
    assert match(pat2, parse("(l(a)*r(b))")) is None
    assert substitute(pat, {"x": Var("u")}) == parse("l((u*y))")


@given(terms)
def test_substitute_identity(t):
    assert substitute(t, {}) == t


def test_unary_view():
    assert unary_view(parse("l(r(l(v)))")) == ("lrl", "v")
    assert unary_view(parse("v")) == ("", "v")
    assert unary_view(parse("(x*y)")) is None
    from jtalg.terms import from_unary_view
    assert from_unary_view("lrl", "v") == parse("l(r(l(v)))")
    assert from_unary_view("", "q") == Var("q")


def test_random_term_sizes(rng):
    for _ in range(200):
        t = random_term(rng, 8)
        assert 1 <= term_size(t) <= 8
        assert term_vars(t) <= {"x", "y", "z"}
