"""The Jonsson-Tarski algebra on the natural numbers.

Multiplication is the anti-diagonal pairing table (see jtalg.kernel for
the closed form); the projections read the row and column of a value's
unique cell.  Both projections are regressive away from 0, which makes
every element generate the whole algebra; ``jw_verify`` checks all of this
exhaustively on a bounded window.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import JTAlgebraHandle
from .kernel import jw_descent, jw_mul, jw_unpair, pair_scan, value_scan

__all__ = [
    "jw_mul", "jw_unpair", "jw_left", "jw_right", "jw_descent",
    "jw_table", "jw_verify", "jw_handle", "VerifyReport", "TABLE_BLOCK",
]

# Top-left 5x5 block of the table; fixed by the seed pattern and the
# anti-diagonal fill, and used as the reference block by jw_verify.
TABLE_BLOCK: tuple[tuple[int, ...], ...] = (
    (1, 2, 5, 9, 14),
    (0, 4, 8, 13, 19),
    (3, 7, 12, 18, 25),
    (6, 11, 17, 24, 32),
    (10, 16, 23, 31, 40),
)


def jw_left(n: int) -> int:
    return jw_unpair(n)[0]


def jw_right(n: int) -> int:
    return jw_unpair(n)[1]


def jw_table(rows: int, cols: int) -> list[list[int]]:
    """The table block with the given number of rows and columns."""
    return [[jw_mul(p, q) for q in range(cols)] for p in range(rows)]


def jw_handle() -> JTAlgebraHandle:
    """Handle over the naturals; the probe enumeration is the identity."""
    return JTAlgebraHandle(
        carrier_name="j_omega",
        mul=jw_mul,
        left=jw_left,
        right=jw_right,
        probe_enumerator=lambda i: i,
        contains=lambda v: isinstance(v, int) and not isinstance(v, bool) and v >= 0,
    )


@dataclass(frozen=True)
class VerifyReport:
    bound: int
    values_checked: int
    pairs_checked: int
    failures: tuple[tuple, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "values_checked": self.values_checked,
            "pairs_checked": self.pairs_checked,
            "failures": [list(f) for f in self.failures],
            "ok": self.ok,
        }


def jw_verify(bound: int) -> VerifyReport:
    """Exhaustive window check: the projections are regressive and invert
    the product for all n <= bound, the product round-trips for all p + q
    <= bound, and the computed top-left block equals the reference block."""
    if bound < 3:
        raise ValueError("bound must be at least 3")
    failures: list[tuple] = []
    values_checked, value_failures = value_scan(bound)
    failures.extend(value_failures)
    pairs_checked, pair_failures = pair_scan(bound)
    failures.extend(pair_failures)
    for p in range(5):
        for q in range(5):
            if jw_mul(p, q) != TABLE_BLOCK[p][q]:
                failures.append(("table_block", p, q))
    return VerifyReport(bound, values_checked, pairs_checked, tuple(failures))
