"""Normalization to product/projection normal form.

The three axioms are oriented left to right as rewrite rules:

    l((x*y)) -> x        r((x*y)) -> y        (l(z)*r(z)) -> z

Every rule strictly shrinks the term, so rewriting terminates.  The normal
form is a product tree over projection-prefixed variables and carries the
minimal number of product symbols in its equivalence class; both facts are
exercised by the test suite rather than assumed.
"""

from __future__ import annotations

from .proofs import Derivation, Step
from .terms import L, Mul, Path, R, Term, Var, replace_at

__all__ = ["normalize", "normalize_with", "rewrite_once", "is_normal"]


def _redex(t: Term) -> tuple[str, dict[str, Term], Term] | None:
    """Rule name, matching binding and contractum if t itself is a redex."""
    if isinstance(t, L) and isinstance(t.arg, Mul):
        return "eps_l", {"x": t.arg.left, "y": t.arg.right}, t.arg.left
    if isinstance(t, R) and isinstance(t.arg, Mul):
        return "eps_r", {"x": t.arg.left, "y": t.arg.right}, t.arg.right
    if (isinstance(t, Mul) and isinstance(t.left, L) and isinstance(t.right, R)
            and t.left.arg == t.right.arg):
        return "eps_mul", {"z": t.left.arg}, t.left.arg
    return None


def _children(t: Term) -> tuple[tuple[str, Term], ...]:
    if isinstance(t, Mul):
        return (("left", t.left), ("right", t.right))
    if isinstance(t, L):
        return (("l", t.arg),)
    if isinstance(t, R):
        return (("r", t.arg),)
    return ()


def _find_innermost(t: Term, pos: Path = ()):
    for sel, child in _children(t):
        found = _find_innermost(child, pos + (sel,))
        if found is not None:
            return found
    hit = _redex(t)
    if hit is not None:
        return pos, hit
    return None


def _find_outermost(t: Term, pos: Path = ()):
    hit = _redex(t)
    if hit is not None:
        return pos, hit
    for sel, child in _children(t):
        found = _find_outermost(child, pos + (sel,))
        if found is not None:
            return found
    return None


_STRATEGIES = {"innermost": _find_innermost, "outermost": _find_outermost}


def rewrite_once(t: Term, strategy: str = "innermost") -> tuple[Term, Step] | None:
    """One rewrite step under the given strategy, or None at normal form."""
    found = _STRATEGIES[strategy](t)
    if found is None:
        return None
    pos, (rule, binding, result) = found
    return replace_at(t, pos, result), Step(pos, rule, "fwd", binding)


def normalize_with(t: Term, strategy: str) -> tuple[Term, Derivation]:
    start = t
    steps = []
    while True:
        out = rewrite_once(t, strategy)
        if out is None:
            return t, Derivation(start, tuple(steps), t)
        t, step = out
        steps.append(step)


def normalize(t: Term) -> tuple[Term, Derivation]:
    """Normal form of t and the axiom-only chain that reaches it."""
    return normalize_with(t, "innermost")


def is_normal(t: Term) -> bool:
    return _find_outermost(t) is None
