"""Jonsson-Tarski algebra workbench.

Decides entailment for the three pairing axioms with checkable derivations,
and realizes the pairing algebra on the naturals together with finite stage
truncations of its transfinite extension.
"""

__version__ = "0.1.0"

from .algebra import (AxiomReport, ClosureBudget, ClosureResult, JTAlgebraHandle,
                      check_axioms, closure, closure_resume, evaluate)
from .decide import Collapsing, Entailed, Verdict, decide
from .jomega import jw_descent, jw_handle, jw_mul, jw_table, jw_unpair, jw_verify
from .normalize import is_normal, normalize
from .ordinals import Ord, format_ord, parse_ord
from .proofs import Derivation, Step, check_derivation
from .stages import StageAlgebra, classify, lset_element, lset_locate
from .terms import (Identity, ParseError, Term, is_mu_term, mult_count, parse,
                    parse_identity, render, render_identity)

__all__ = [
    "AxiomReport", "ClosureBudget", "ClosureResult", "JTAlgebraHandle",
    "check_axioms", "closure", "closure_resume", "evaluate",
    "Collapsing", "Entailed", "Verdict", "decide",
    "jw_descent", "jw_handle", "jw_mul", "jw_table", "jw_unpair", "jw_verify",
    "is_normal", "normalize",
    "Ord", "format_ord", "parse_ord",
    "Derivation", "Step", "check_derivation",
    "StageAlgebra", "classify", "lset_element", "lset_locate",
    "Identity", "ParseError", "Term", "is_mu_term", "mult_count", "parse",
    "parse_identity", "render", "render_identity",
]
