"""Terms of the Jonsson-Tarski language: one binary product and two unary
projections over named variables.

The concrete syntax is fully parenthesized:

    term := VAR | "l(" term ")" | "r(" term ")" | "(" term "*" term ")"
    VAR  := [a-zA-Z_][a-zA-Z0-9_]*   (the reserved words "l" and "r" excluded)

Whitespace is permitted between tokens.  ``render`` emits the canonical
form with no whitespace, and ``parse(render(t)) == t`` for every term.
Variable names beginning with ``$`` are reserved for machine-generated
witnesses; they are rejected by ``parse`` but accepted when derivations
are deserialized.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

__all__ = [
    "Term", "Var", "L", "R", "Mul",
    "Identity", "ParseError",
    "parse", "parse_identity", "render", "render_identity",
    "is_mu_term", "mult_count", "term_size", "term_vars",
    "subterm_at", "replace_at", "positions", "substitute", "match",
    "unary_view", "from_unary_view",
    "random_term", "random_identity",
]


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


@dataclass(frozen=True, slots=True)
class L:
    arg: "Term"


@dataclass(frozen=True, slots=True)
class R:
    arg: "Term"


@dataclass(frozen=True, slots=True)
class Mul:
    left: "Term"
    right: "Term"


Term = Union[Var, L, R, Mul]

Subst = Mapping[str, Term]


@dataclass(frozen=True, slots=True)
class Identity:
    """An equation between two terms."""

    lhs: Term
    rhs: Term

    def flipped(self) -> "Identity":
        return Identity(self.rhs, self.lhs)


class ParseError(ValueError):
    """Syntax error with the byte offset and the tokens that were expected."""

    def __init__(self, offset: int, expected: tuple[str, ...], found: str):
        self.offset = offset
        self.expected = expected
        self.found = found
        want = " or ".join(expected)
        super().__init__(f"syntax error at offset {offset}: expected {want}, found {found}")


_RESERVED = ("l", "r")


def _is_name_start(c: str, allow_reserved_names: bool) -> bool:
    return c.isalpha() or c == "_" or (allow_reserved_names and c == "$")


def _is_name_char(c: str) -> bool:
    return c.isalnum() or c == "_"


class _Parser:
    def __init__(self, text: str, allow_reserved_names: bool = False):
        self.text = text
        self.pos = 0
        self.allow_reserved_names = allow_reserved_names

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, expected: tuple[str, ...]) -> ParseError:
        found = repr(self.peek()) if self.peek() else "end of input"
        return ParseError(self.pos, expected, found)

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.peek() != ch:
            raise self.error((repr(ch),))
        self.pos += 1

    def name(self) -> str:
        self.skip_ws()
        start = self.pos
        if not _is_name_start(self.peek(), self.allow_reserved_names):
            raise self.error(("variable", "'l('", "'r('", "'('"))
        self.pos += 1
        while self.pos < len(self.text) and _is_name_char(self.text[self.pos]):
            self.pos += 1
        return self.text[start:self.pos]

    def term(self) -> Term:
        self.skip_ws()
        c = self.peek()
        if c == "(":
            self.pos += 1
            left = self.term()
            self.expect("*")
            right = self.term()
            self.expect(")")
            return Mul(left, right)
        word = self.name()
        if word in _RESERVED:
            self.expect("(")
            arg = self.term()
            self.expect(")")
            return L(arg) if word == "l" else R(arg)
        return Var(word)

    def end(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error(("end of input",))


def parse(text: str, *, allow_reserved_names: bool = False) -> Term:
    """Parse a term in the concrete grammar; raise ParseError with offset."""
    p = _Parser(text, allow_reserved_names)
    t = p.term()
    p.end()
    return t


def parse_identity(text: str, *, allow_reserved_names: bool = False) -> Identity:
    """Parse ``term = term``."""
    p = _Parser(text, allow_reserved_names)
    lhs = p.term()
    p.expect("=")
    rhs = p.term()
    p.end()
    return Identity(lhs, rhs)


def render(t: Term) -> str:
    """Canonical fully parenthesized form; inverse of parse."""
    if isinstance(t, Var):
        return t.name
    if isinstance(t, L):
        return f"l({render(t.arg)})"
    if isinstance(t, R):
        return f"r({render(t.arg)})"
    return f"({render(t.left)}*{render(t.right)})"


def render_identity(ident: Identity) -> str:
    return f"{render(ident.lhs)} = {render(ident.rhs)}"


def is_mu_term(t: Term) -> bool:
    """True iff t is a product tree whose leaves are unary-prefixed variables."""
    if isinstance(t, Mul):
        return is_mu_term(t.left) and is_mu_term(t.right)
    return _is_unary(t)


def _is_unary(t: Term) -> bool:
    while isinstance(t, (L, R)):
        t = t.arg
    return isinstance(t, Var)


def mult_count(t: Term) -> int:
    if isinstance(t, Mul):
        return 1 + mult_count(t.left) + mult_count(t.right)
    if isinstance(t, (L, R)):
        return mult_count(t.arg)
    return 0


def term_size(t: Term) -> int:
    """Number of nodes (variables and operation symbols)."""
    if isinstance(t, Mul):
        return 1 + term_size(t.left) + term_size(t.right)
    if isinstance(t, (L, R)):
        return 1 + term_size(t.arg)
    return 1


def term_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, (L, R)):
        return term_vars(t.arg)
    return term_vars(t.left) | term_vars(t.right)


# Positions are paths of child selectors: "left"/"right" descend a product,
# "l"/"r" descend the matching unary symbol.  The selector names double as
# validation: a path is rejected unless each selector fits the node it meets.

Path = tuple[str, ...]


def _child(t: Term, sel: str) -> Term | None:
    if sel == "left" and isinstance(t, Mul):
        return t.left
    if sel == "right" and isinstance(t, Mul):
        return t.right
    if sel == "l" and isinstance(t, L):
        return t.arg
    if sel == "r" and isinstance(t, R):
        return t.arg
    return None


def subterm_at(t: Term, pos: Path) -> Term | None:
    """The subterm addressed by pos, or None if the path does not fit."""
    for sel in pos:
        t = _child(t, sel)  # type: ignore[assignment]
        if t is None:
            return None
    return t


def replace_at(t: Term, pos: Path, new: Term) -> Term:
    """Copy of t with the subterm at pos replaced; pos must address a subterm."""
    if not pos:
        return new
    sel, rest = pos[0], pos[1:]
    if sel == "left" and isinstance(t, Mul):
        return Mul(replace_at(t.left, rest, new), t.right)
    if sel == "right" and isinstance(t, Mul):
        return Mul(t.left, replace_at(t.right, rest, new))
    if sel == "l" and isinstance(t, L):
        return L(replace_at(t.arg, rest, new))
    if sel == "r" and isinstance(t, R):
        return R(replace_at(t.arg, rest, new))
    raise ValueError(f"position {pos!r} does not address a subterm of {render(t)}")


def positions(t: Term, prefix: Path = ()) -> Iterator[tuple[Path, Term]]:
    """All (path, subterm) pairs in preorder."""
    yield prefix, t
    if isinstance(t, Mul):
        yield from positions(t.left, prefix + ("left",))
        yield from positions(t.right, prefix + ("right",))
    elif isinstance(t, L):
        yield from positions(t.arg, prefix + ("l",))
    elif isinstance(t, R):
        yield from positions(t.arg, prefix + ("r",))


def substitute(t: Term, subst: Subst) -> Term:
    """Apply a substitution; variables without an image are left in place."""
    if isinstance(t, Var):
        return subst.get(t.name, t)
    if isinstance(t, L):
        return L(substitute(t.arg, subst))
    if isinstance(t, R):
        return R(substitute(t.arg, subst))
    return Mul(substitute(t.left, subst), substitute(t.right, subst))


def match(pattern: Term, t: Term, subst: dict[str, Term] | None = None) -> dict[str, Term] | None:
    """First-order matching of t against pattern.

    Returns the binding of pattern variables, or None.  Repeated pattern
    variables must bind equal subterms.
    """
    if subst is None:
        subst = {}
    if isinstance(pattern, Var):
        bound = subst.get(pattern.name)
        if bound is None:
            subst[pattern.name] = t
            return subst
        return subst if bound == t else None
    if isinstance(pattern, L) and isinstance(t, L):
        return match(pattern.arg, t.arg, subst)
    if isinstance(pattern, R) and isinstance(t, R):
        return match(pattern.arg, t.arg, subst)
    if isinstance(pattern, Mul) and isinstance(t, Mul):
        inner = match(pattern.left, t.left, subst)
        if inner is None:
            return None
        return match(pattern.right, t.right, subst)
    return None


def unary_view(t: Term) -> tuple[str, str] | None:
    """Decompose a projection-only term into (prefix, variable name).

    The prefix is the string of 'l'/'r' symbols read from the outside in;
    returns None if t contains a product.
    """
    prefix = []
    while True:
        if isinstance(t, Var):
            return "".join(prefix), t.name
        if isinstance(t, L):
            prefix.append("l")
            t = t.arg
        elif isinstance(t, R):
            prefix.append("r")
            t = t.arg
        else:
            return None


def from_unary_view(prefix: str, name: str) -> Term:
    t: Term = Var(name)
    for sym in reversed(prefix):
        t = L(t) if sym == "l" else R(t)
    return t


def random_term(rng: random.Random, max_size: int, variables=("x", "y", "z")) -> Term:
    """A uniformly seeded random term with term_size <= max_size."""
    return _grow(rng, rng.randint(1, max_size), variables)


def _grow(rng: random.Random, size: int, variables) -> Term:
    if size <= 1:
        return Var(rng.choice(variables))
    if size == 2:
        return (L if rng.random() < 0.5 else R)(_grow(rng, 1, variables))
    roll = rng.random()
    if roll < 0.45:
        split = rng.randint(1, size - 2)
        return Mul(_grow(rng, split, variables), _grow(rng, size - 1 - split, variables))
    cls = L if roll < 0.725 else R
    return cls(_grow(rng, size - 1, variables))


def random_identity(rng: random.Random, max_size: int, variables=("x", "y", "z")) -> Identity:
    return Identity(random_term(rng, max_size, variables),
                    random_term(rng, max_size, variables))
