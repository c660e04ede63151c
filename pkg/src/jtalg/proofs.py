"""Positioned rewrite derivations over the three Jonsson-Tarski axioms.

A derivation is a chain of steps replayed on a single current term.  Each
step cites an axiom, the ambient hypothesis identity, or performs a global
instantiation of the current term:

* ``eps_l``:   l((x*y)) = x
* ``eps_r``:   r((x*y)) = y
* ``eps_mul``: (l(z)*r(z)) = z
* ``hyp``:     the hypothesis identity supplied to the checker
* ``inst``:    apply a substitution to the whole current term

Axiom and hypothesis steps carry a direction and may carry an explicit
substitution.  The substitution is mandatory whenever matching the source
side cannot determine the target instance (an erasing rule applied
backwards, or a hypothesis whose target side introduces variables); it is
always validated against the current subterm, so a replay is deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from .terms import (
    Identity, L, Mul, Path, R, Term, Var,
    match, parse, render, replace_at, substitute, subterm_at, term_vars,
)

__all__ = [
    "Step", "Derivation", "CheckResult", "AXIOMS",
    "check_derivation", "reverse", "concat", "shift", "instantiate",
    "derivation_to_json", "derivation_from_json",
    "step_to_json", "step_from_json",
]

AXIOMS: dict[str, tuple[Term, Term]] = {
    "eps_l": (L(Mul(Var("x"), Var("y"))), Var("x")),
    "eps_r": (R(Mul(Var("x"), Var("y"))), Var("y")),
    "eps_mul": (Mul(L(Var("z")), R(Var("z"))), Var("z")),
}

FORWARD = "fwd"
BACKWARD = "bwd"


@dataclass(frozen=True, slots=True)
class Step:
    pos: Path
    rule: str                 # "eps_l" | "eps_r" | "eps_mul" | "hyp" | "inst"
    direction: str            # "fwd" | "bwd"
    subst: Mapping[str, Term] | None = None

    def flipped(self) -> "Step":
        d = BACKWARD if self.direction == FORWARD else FORWARD
        return Step(self.pos, self.rule, d, self.subst)


@dataclass(frozen=True, slots=True)
class Derivation:
    start: Term
    steps: tuple[Step, ...]
    end: Term


@dataclass(frozen=True, slots=True)
class CheckResult:
    ok: bool
    step_index: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return f"invalid at step {self.step_index}: {self.reason}"


def _rule_sides(step: Step, hypothesis: Identity | None) -> tuple[Term, Term] | str:
    if step.rule in AXIOMS:
        lhs, rhs = AXIOMS[step.rule]
    elif step.rule == "hyp":
        if hypothesis is None:
            return "hypothesis step but no hypothesis supplied"
        lhs, rhs = hypothesis.lhs, hypothesis.rhs
    else:
        return f"unknown rule {step.rule!r}"
    if step.direction == FORWARD:
        return lhs, rhs
    if step.direction == BACKWARD:
        return rhs, lhs
    return f"unknown direction {step.direction!r}"


def replay_step(current: Term, step: Step, hypothesis: Identity | None) -> Term | str:
    """Apply one step to the current term; return the new term or a reason."""
    if step.rule == "inst":
        if step.subst is None:
            return "instantiate step requires a substitution"
        if step.pos:
            return "instantiate applies to the whole term; position must be empty"
        return substitute(current, step.subst)
    sides = _rule_sides(step, hypothesis)
    if isinstance(sides, str):
        return sides
    src, dst = sides
    sub = subterm_at(current, step.pos)
    if sub is None:
        return f"position {list(step.pos)!r} does not address a subterm"
    if step.subst is not None:
        if substitute(src, step.subst) != sub:
            return "explicit substitution does not match the subterm"
        binding: Mapping[str, Term] = step.subst
    else:
        found = match(src, sub)
        if found is None:
            return f"subterm {render(sub)} is not an instance of {render(src)}"
        if not term_vars(dst) <= found.keys():
            return "ambiguous step: an explicit substitution is required"
        binding = found
    return replace_at(current, step.pos, substitute(dst, binding))


def check_derivation(d: Derivation, hypothesis: Identity | None = None) -> CheckResult:
    """Replay every step of d, validating positions, rule instances and
    directions; succeeds iff the replay reaches d.end."""
    current = d.start
    for i, step in enumerate(d.steps):
        out = replay_step(current, step, hypothesis)
        if isinstance(out, str):
            return CheckResult(False, i, out)
        current = out
    if current != d.end:
        return CheckResult(
            False, len(d.steps),
            f"replay ends at {render(current)}, not {render(d.end)}")
    return CheckResult(True)


# ---------------------------------------------------------------------------
# derivation algebra used by the constructors

def reverse(d: Derivation) -> Derivation:
    """The chain read backwards.  Sound because every step records its
    matching substitution, so erasing rules stay replayable."""
    return Derivation(d.end, tuple(s.flipped() for s in reversed(d.steps)), d.start)


def concat(*parts: Derivation) -> Derivation:
    for a, b in zip(parts, parts[1:]):
        if a.end != b.start:
            raise ValueError(f"cannot chain {render(a.end)} with {render(b.start)}")
    steps: tuple[Step, ...] = ()
    for p in parts:
        steps += p.steps
    return Derivation(parts[0].start, steps, parts[-1].end)


def shift(steps: tuple[Step, ...], prefix: Path) -> tuple[Step, ...]:
    """Re-address steps so they act below prefix inside a larger term."""
    return tuple(Step(prefix + s.pos, s.rule, s.direction, s.subst) for s in steps)


def instantiate(d: Derivation, subst: Mapping[str, Term]) -> Derivation:
    """The image of a whole derivation under a substitution.

    Rewriting is stable under substitution, so applying subst to the start,
    the end, and every recorded binding yields another valid chain.
    """
    def inst_subst(s: Mapping[str, Term] | None):
        if s is None:
            return None
        return {k: substitute(v, subst) for k, v in s.items()}

    return Derivation(
        substitute(d.start, subst),
        tuple(Step(s.pos, s.rule, s.direction, inst_subst(s.subst)) for s in d.steps),
        substitute(d.end, subst),
    )


# ---------------------------------------------------------------------------
# JSON wire format: {start, steps: [{pos, rule, dir, subst?}], end}

def step_to_json(s: Step) -> dict:
    out: dict = {"pos": list(s.pos), "rule": s.rule, "dir": s.direction}
    if s.subst is not None:
        out["subst"] = {k: render(v) for k, v in sorted(s.subst.items())}
    return out


def step_from_json(obj: dict) -> Step:
    subst = None
    if "subst" in obj and obj["subst"] is not None:
        subst = {k: parse(v, allow_reserved_names=True) for k, v in obj["subst"].items()}
    return Step(tuple(obj["pos"]), obj["rule"], obj["dir"], subst)


def derivation_to_json(d: Derivation) -> dict:
    return {
        "start": render(d.start),
        "steps": [step_to_json(s) for s in d.steps],
        "end": render(d.end),
    }


def derivation_from_json(obj: dict) -> Derivation:
    return Derivation(
        parse(obj["start"], allow_reserved_names=True),
        tuple(step_from_json(s) for s in obj["steps"]),
        parse(obj["end"], allow_reserved_names=True),
    )


def dumps(d: Derivation, **kwargs) -> str:
    return json.dumps(derivation_to_json(d), **kwargs)
