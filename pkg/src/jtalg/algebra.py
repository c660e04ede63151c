"""Abstract Jonsson-Tarski algebras: a product, two projections, and a
canonical enumeration of the carrier for probing.

A handle bundles the three operations over an opaque carrier together with
a membership predicate and a probe enumerator.  Everything here is pure
relative to the handle, so handles are safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping

from .terms import L, Mul, R, Term, Var

__all__ = [
    "JTAlgebraHandle", "AxiomReport", "ClosureBudget", "ClosureResult",
    "EvaluationError", "CarrierError",
    "evaluate", "check_axioms", "closure", "closure_resume",
]

Element = Any


class EvaluationError(ValueError):
    pass


class CarrierError(TypeError):
    """An element of one carrier was used with an algebra over another."""


@dataclass(frozen=True)
class JTAlgebraHandle:
    carrier_name: str
    mul: Callable[[Element, Element], Element]
    left: Callable[[Element], Element]
    right: Callable[[Element], Element]
    probe_enumerator: Callable[[int], Element]
    contains: Callable[[Element], bool]

    def check_element(self, value: Element, what: str) -> None:
        if not self.contains(value):
            raise CarrierError(
                f"{what}: {value!r} is not an element of carrier {self.carrier_name!r}")


@dataclass(frozen=True)
class AxiomReport:
    carrier_name: str
    checked_count: int
    violations: tuple[tuple[str, tuple[Element, ...]], ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        def as_json(e: Element):
            return e if isinstance(e, int) else str(e)

        return {
            "checked": self.checked_count,
            "violations": [
                {"axiom": axiom, "witness": [as_json(e) for e in witness]}
                for axiom, witness in self.violations
            ],
        }


def evaluate(t: Term, alg: JTAlgebraHandle, env: Mapping[str, Element]) -> Element:
    """Interpret t in the algebra: variables through env, the operation
    symbols through the handle."""
    for name, value in env.items():
        alg.check_element(value, f"assignment for {name!r}")
    return _eval(t, alg, env)


def _eval(t: Term, alg: JTAlgebraHandle, env: Mapping[str, Element]) -> Element:
    if isinstance(t, Var):
        try:
            return env[t.name]
        except KeyError:
            raise EvaluationError(f"unbound variable {t.name!r}") from None
    if isinstance(t, L):
        return alg.left(_eval(t.arg, alg, env))
    if isinstance(t, R):
        return alg.right(_eval(t.arg, alg, env))
    return alg.mul(_eval(t.left, alg, env), _eval(t.right, alg, env))


def check_axioms(alg: JTAlgebraHandle, probe_size: int) -> AxiomReport:
    """Check the three axioms instance-wise on the canonical probe window:
    the projection axioms on every ordered pair from the first probe_size
    elements, the product axiom on each element.  A failing instance is a
    report entry, never an exception."""
    if probe_size < 1:
        raise ValueError("probe_size must be at least 1")
    probes = [alg.probe_enumerator(i) for i in range(probe_size)]
    violations: list[tuple[str, tuple[Element, ...]]] = []
    checked = 0
    for p in probes:
        for q in probes:
            v = alg.mul(p, q)
            checked += 2
            if alg.left(v) != p:
                violations.append(("eps_l", (p, q)))
            if alg.right(v) != q:
                violations.append(("eps_r", (p, q)))
    for v in probes:
        checked += 1
        if alg.mul(alg.left(v), alg.right(v)) != v:
            violations.append(("eps_mul", (v,)))
    return AxiomReport(alg.carrier_name, checked, tuple(violations))


@dataclass(frozen=True)
class ClosureBudget:
    """Bounds for subalgebra generation.

    max_elements caps how many elements may be discovered; product_ceiling
    defers any product whose value exceeds it (None means unbounded); with
    products False only the projections are applied.
    """

    max_elements: int | None = None
    product_ceiling: Element | None = None
    products: bool = True


@dataclass
class ClosureResult:
    elements: list[Element]          # in discovery order
    truncated: bool
    deferred: list[tuple[Element, Element]]
    _members: set = field(default_factory=set, repr=False)

    def __post_init__(self) -> None:
        if not self._members:
            self._members = set(self.elements)

    def __contains__(self, e: Element) -> bool:
        return e in self._members

    def __len__(self) -> int:
        return len(self.elements)


def closure(alg: JTAlgebraHandle, generators: Iterable[Element],
            budget: ClosureBudget = ClosureBudget()) -> ClosureResult:
    """Smallest subset containing the generators and closed under the
    projections, and under the product for pairs whose value stays at or
    under the ceiling.  Breadth-first in discovery order, so deterministic;
    products over the ceiling are deferred and reported, not dropped."""
    gens = sorted(set(generators))
    if not gens:
        raise ValueError("closure requires at least one generator")
    for g in gens:
        alg.check_element(g, "generator")
    return _close(alg, gens, [], budget)


def closure_resume(alg: JTAlgebraHandle, prev: ClosureResult,
                   budget: ClosureBudget) -> ClosureResult:
    """Continue a closure whose ceiling has risen: deferred products are
    retried and the frontier re-expanded under the new budget."""
    return _close(alg, list(prev.elements), list(prev.deferred), budget)


def _close(alg: JTAlgebraHandle, seed: list[Element],
           retry: list[tuple[Element, Element]], budget: ClosureBudget) -> ClosureResult:
    elements: list[Element] = []
    members: set = set()
    deferred: list[tuple[Element, Element]] = []
    truncated = False

    def admit(e: Element) -> bool:
        nonlocal truncated
        if e in members:
            return True
        if budget.max_elements is not None and len(elements) >= budget.max_elements:
            truncated = True
            return False
        members.add(e)
        elements.append(e)
        return True

    def product(p: Element, q: Element) -> bool:
        v = alg.mul(p, q)
        if budget.product_ceiling is not None and v > budget.product_ceiling:
            deferred.append((p, q))
            return True
        return admit(v)

    for g in seed:
        if not admit(g):
            break
    for p, q in retry:
        if truncated or not budget.products:
            deferred.append((p, q))
            continue
        product(p, q)

    scan = 0
    while scan < len(elements) and not truncated:
        e = elements[scan]
        scan += 1
        if not admit(alg.left(e)) or not admit(alg.right(e)):
            break
        if not budget.products:
            continue
        stop = False
        for other in elements[:scan]:
            if not product(e, other) or (other != e and not product(other, e)):
                stop = True
                break
        if stop:
            break
    return ClosureResult(elements, truncated, deferred, members)
