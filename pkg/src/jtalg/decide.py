"""The entailment dichotomy for the Jonsson-Tarski axioms.

For any identity s = t exactly one of two things is true: the axioms entail
s = t outright, or adding s = t to the axioms collapses every model to a
point.  ``decide`` settles which, and in both branches returns a derivation
that the independent replay checker can certify:

* ``Entailed`` carries a chain from s to t using axiom steps only.
* ``Collapsing`` carries a chain from the variable x to the variable y
  whose hypothesis steps cite s = t itself.

The procedure normalizes both sides, peels products by recursing on the
left and right projections, and settles projection-only identities by a
case split on their variables, prefixes and innermost symbols.  Witnesses
for the collapsing branch are assembled from the inside out: the innermost
sub-identity has a one-step witness, and each enclosing layer expands the
hypothesis steps that cite its derived identity into steps citing its own.
Machine-chosen variables come from the reserved ``$`` namespace, and a
final instantiation renames the conclusion to the canonical x = y.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .normalize import normalize
from .proofs import BACKWARD, FORWARD, Derivation, Step, concat, instantiate, reverse, shift
from .terms import Identity, L, Mul, Path, R, Term, Var, unary_view

__all__ = ["Entailed", "Collapsing", "Verdict", "decide"]


@dataclass(frozen=True, slots=True)
class Entailed:
    proof: Derivation


@dataclass(frozen=True, slots=True)
class Collapsing:
    proof: Derivation


Verdict = Entailed | Collapsing

# An emitter expands one forward hypothesis step citing a derived identity
# into the steps that establish the same rewrite from the parent identity.
# Backward uses replay the flipped reverse of the emitted list, which is
# valid because every emitted step carries its binding.
Emitter = Callable[[Mapping[str, Term], Path], list[Step]]


class _Fresh:
    """Names ``$0``, ``$1``, ... - disjoint from every parseable variable."""

    def __init__(self) -> None:
        self.counter = 0

    def __call__(self) -> str:
        name = f"${self.counter}"
        self.counter += 1
        return name


def _expand_hyps(witness: Derivation, emit: Emitter) -> Derivation:
    steps: list[Step] = []
    for step in witness.steps:
        if step.rule != "hyp":
            steps.append(step)
            continue
        assert step.subst is not None
        if step.direction == FORWARD:
            steps.extend(emit(step.subst, step.pos))
        else:
            steps.extend(s.flipped() for s in reversed(emit(step.subst, step.pos)))
    return Derivation(witness.start, tuple(steps), witness.end)


def _flip_citations(witness: Derivation) -> Derivation:
    """Make a witness citing t = s cite s = t instead."""
    steps = tuple(s.flipped() if s.rule == "hyp" else s for s in witness.steps)
    return Derivation(witness.start, steps, witness.end)


def _prefix_path(prefix: str) -> Path:
    return tuple(prefix)


def _wrap_step(sym: str, u: Term, partner: Term, pos: Path, direction: str) -> Step:
    """An eps_l/eps_r step between ``u`` and ``sym(pair)`` at pos, where the
    pair puts u on the component that sym projects out."""
    if sym == "l":
        return Step(pos, "eps_l", direction, {"x": u, "y": partner})
    return Step(pos, "eps_r", direction, {"x": partner, "y": u})


def decide(identity: Identity) -> Verdict:
    """Decide the identity and build its checkable certificate."""
    return _decide(identity, _Fresh())


def _decide(identity: Identity, fresh: _Fresh) -> Verdict:
    s, t = identity.lhs, identity.rhs
    s_nf, d_s = normalize(s)
    t_nf, d_t = normalize(t)
    core = _decide_normal(s_nf, t_nf, fresh)
    if isinstance(core, Entailed):
        return Entailed(concat(d_s, core.proof, reverse(d_t)))
    if not d_s.steps and not d_t.steps:
        return core

    def emit(binding: Mapping[str, Term], pos: Path) -> list[Step]:
        steps = list(shift(reverse(instantiate(d_s, binding)).steps, pos))
        steps.append(Step(pos, "hyp", FORWARD, binding))
        steps.extend(shift(instantiate(d_t, binding).steps, pos))
        return steps

    return Collapsing(_expand_hyps(core.proof, emit))


def _decide_normal(a: Term, b: Term, fresh: _Fresh) -> Verdict:
    """Dichotomy for terms already in normal form; a collapsing witness
    cites a = b."""
    if a == b:
        return Entailed(Derivation(a, (), a))
    if isinstance(a, Mul) or isinstance(b, Mul):
        return _decide_product(a, b, fresh)
    return Collapsing(_decide_unary(a, b, fresh))


def _cong_emit(sym: str) -> Emitter:
    def emit(binding: Mapping[str, Term], pos: Path) -> list[Step]:
        return [Step(pos + (sym,), "hyp", FORWARD, binding)]

    return emit


def _decide_product(a: Term, b: Term, fresh: _Fresh) -> Verdict:
    sub_l = _decide(Identity(L(a), L(b)), fresh)
    if isinstance(sub_l, Collapsing):
        return Collapsing(_expand_hyps(sub_l.proof, _cong_emit("l")))
    sub_r = _decide(Identity(R(a), R(b)), fresh)
    if isinstance(sub_r, Collapsing):
        return Collapsing(_expand_hyps(sub_r.proof, _cong_emit("r")))
    glue = [Step((), "eps_mul", BACKWARD, {"z": a})]
    glue.extend(shift(sub_l.proof.steps, ("left",)))
    glue.extend(shift(sub_r.proof.steps, ("right",)))
    glue.append(Step((), "eps_mul", FORWARD, {"z": b}))
    return Entailed(Derivation(a, tuple(glue), b))


def _decide_unary(a: Term, b: Term, fresh: _Fresh) -> Derivation:
    pa, va = unary_view(a)
    pb, vb = unary_view(b)
    if va != vb:
        return _different_vars(pa, va, pb, vb, fresh)
    return _same_var(pa, pb, va, fresh)


def _different_vars(pa: str, va: str, pb: str, vb: str, fresh: _Fresh) -> Derivation:
    if pa == pb:
        return _common_prefix(pa, va, vb, fresh)
    if len(pa) < len(pb):
        return _flip_citations(_longer_prefix(pb, vb, pa, va, fresh))
    return _longer_prefix(pa, va, pb, vb, fresh)


def _common_prefix(prefix: str, va: str, vb: str, fresh: _Fresh) -> Derivation:
    """Same prefix, different variables: peel the innermost symbol by
    substituting a fresh pair for each variable of the hypothesis."""
    if not prefix:
        tmp = fresh()
        steps = (
            Step((), "hyp", FORWARD, {va: Var("x"), vb: Var(tmp)}),
            Step((), "inst", FORWARD, {tmp: Var("y")}),
        )
        return Derivation(Var("x"), steps, Var("y"))
    outer, sym = prefix[:-1], prefix[-1]
    ca, cb = fresh(), fresh()
    inner = _common_prefix(outer, ca, cb, fresh)

    def emit(binding: Mapping[str, Term], pos: Path) -> list[Step]:
        ua, ub = binding[ca], binding[cb]
        fa, fb = Var(fresh()), Var(fresh())
        pair_a = Mul(ua, fa) if sym == "l" else Mul(fa, ua)
        pair_b = Mul(ub, fb) if sym == "l" else Mul(fb, ub)
        at = pos + _prefix_path(outer)
        return [
            _wrap_step(sym, ua, fa, at, BACKWARD),
            Step(pos, "hyp", FORWARD, {va: pair_a, vb: pair_b}),
            _wrap_step(sym, ub, fb, at, FORWARD),
        ]

    return _expand_hyps(inner, emit)


def _longer_prefix(pa: str, va: str, pb: str, vb: str, fresh: _Fresh) -> Derivation:
    """Different variables, different prefixes, the first side at least as
    long and nonempty.  Splicing two uses of the hypothesis around a fresh
    intermediate turns it into a common-prefix identity on the shorter
    prefix."""
    cb, cc = fresh(), fresh()
    inner = _common_prefix(pb, cb, cc, fresh)

    def emit(binding: Mapping[str, Term], pos: Path) -> list[Step]:
        g = Var(fresh())
        return [
            Step(pos, "hyp", BACKWARD, {va: g, vb: binding[cb]}),
            Step(pos, "hyp", FORWARD, {va: g, vb: binding[cc]}),
        ]

    return _expand_hyps(inner, emit)


def _same_var(pa: str, pb: str, v: str, fresh: _Fresh) -> Derivation:
    if not pa or not pb:
        if not pa:
            return _flip_citations(_projection_fixpoint(pb, v, fresh))
        return _projection_fixpoint(pa, v, fresh)
    if pa[-1] != pb[-1]:
        return _different_innermost(pa, pb, v, fresh)
    return _strip_innermost(pa, pb, v, fresh)


def _strip_innermost(pa: str, pb: str, v: str, fresh: _Fresh) -> Derivation:
    """Same variable, same innermost symbol: strip it and recurse."""
    sym = pa[-1]
    c = fresh()
    inner = _same_var(pa[:-1], pb[:-1], c, fresh)

    def emit(binding: Mapping[str, Term], pos: Path) -> list[Step]:
        u = binding[c]
        f = Var(fresh())
        pair = Mul(u, f) if sym == "l" else Mul(f, u)
        return [
            _wrap_step(sym, u, f, pos + _prefix_path(pa[:-1]), BACKWARD),
            Step(pos, "hyp", FORWARD, {v: pair}),
            _wrap_step(sym, u, f, pos + _prefix_path(pb[:-1]), FORWARD),
        ]

    return _expand_hyps(inner, emit)


def _different_innermost(pa: str, pb: str, v: str, fresh: _Fresh) -> Derivation:
    """Same variable, both prefixes nonempty with different innermost
    symbols: one pair substitution splits the two sides onto the two
    components of a fresh product."""
    qa = pa[-1]
    ca, cb = fresh(), fresh()
    inner = _different_vars(pa[:-1], ca, pb[:-1], cb, fresh)

    def emit(binding: Mapping[str, Term], pos: Path) -> list[Step]:
        ua, ub = binding[ca], binding[cb]
        pair = Mul(ua, ub) if qa == "l" else Mul(ub, ua)
        return [
            _wrap_step(qa, ua, ub, pos + _prefix_path(pa[:-1]), BACKWARD),
            Step(pos, "hyp", FORWARD, {v: pair}),
            _wrap_step("r" if qa == "l" else "l", ub, ua, pos + _prefix_path(pb[:-1]), FORWARD),
        ]

    return _expand_hyps(inner, emit)


def _projection_fixpoint(prefix: str, v: str, fresh: _Fresh) -> Derivation:
    """Hypothesis P(v) = v with P nonempty.  Substituting a fresh pair for
    v and applying the opposite projection to both sides shows that the
    opposite component equals a term in the other component, which is a
    different-variables identity."""
    sym = prefix[-1]
    other = "r" if sym == "l" else "l"
    ca, cb = fresh(), fresh()
    inner = _different_vars(other + prefix[:-1], ca, "", cb, fresh)

    def emit(binding: Mapping[str, Term], pos: Path) -> list[Step]:
        ua, ub = binding[ca], binding[cb]
        pair = Mul(ua, ub) if sym == "l" else Mul(ub, ua)
        return [
            _wrap_step(sym, ua, ub, pos + (other,) + _prefix_path(prefix[:-1]), BACKWARD),
            Step(pos + (other,), "hyp", FORWARD, {v: pair}),
            _wrap_step(other, ub, ua, pos, FORWARD),
        ]

    return _expand_hyps(inner, emit)
