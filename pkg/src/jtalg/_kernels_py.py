"""Pure-Python pairing kernels for the algebra on the natural numbers.

The multiplication table is the square array filled along anti-diagonals
after seeding 0, 1, 2 in the upper-left corner:

         | 0   1   2   3   4
    -----+-------------------
      0  | 1   2   5   9  14
      1  | 0   4   8  13  19
      2  | 3   7  12  18  25
      3  | 6  11  17  24  32
      4  | 10  16  23  31  40

Off the three seed cells the product is (p+q+1)(p+q)/2 + q, and the
inverse locates the anti-diagonal by an exact integer square root, so the
functions are correct for arbitrarily large naturals.

jtalg.kernel selects the compiled twin of this module when it is built;
both implement the same five functions and must agree bit for bit.
"""

from __future__ import annotations

from math import isqrt

__all__ = ["jw_mul", "jw_unpair", "jw_descent", "value_scan", "pair_scan"]


def jw_mul(p: int, q: int) -> int:
    """Table entry in row p, column q."""
    if p + q > 1:
        s = p + q
        return s * (s + 1) // 2 + q
    if p == 0:
        return 1 if q == 0 else 2
    return 0  # p == 1, q == 0


def jw_unpair(n: int) -> tuple[int, int]:
    """Row and column of the unique cell containing n; inverse of jw_mul."""
    if n < 3:
        return ((1, 0), (0, 0), (0, 1))[n]
    d = (isqrt(8 * n + 1) - 1) // 2
    if d * (d + 1) // 2 > n:
        d -= 1
    elif (d + 1) * (d + 2) // 2 <= n:
        d += 1
    q = n - d * (d + 1) // 2
    return d - q, q


def jw_descent(n: int) -> list[int]:
    """Iterated left projections from n down to 0 inclusive."""
    out = [n]
    while n != 0:
        n = jw_unpair(n)[0]
        out.append(n)
    return out


def value_scan(bound: int) -> tuple[int, list[tuple[str, int]]]:
    """For every n <= bound check jw_mul(jw_unpair(n)) == n and, for n >= 1,
    that both components are strictly below n.  Returns the number of values
    checked and the failures as (kind, witness) pairs."""
    failures: list[tuple[str, int]] = []
    for n in range(bound + 1):
        p, q = jw_unpair(n)
        if jw_mul(p, q) != n:
            failures.append(("roundtrip", n))
        if n >= 1 and not (p < n and q < n):
            failures.append(("regressive", n))
    return bound + 1, failures


def pair_scan(bound: int) -> tuple[int, list[tuple[str, int, int]]]:
    """For every p, q with p + q <= bound check jw_unpair(jw_mul(p, q)) ==
    (p, q).  Returns the number of pairs checked and the failures."""
    failures: list[tuple[str, int, int]] = []
    checked = 0
    for s in range(bound + 1):
        for p in range(s + 1):
            q = s - p
            checked += 1
            if jw_unpair(jw_mul(p, q)) != (p, q):
                failures.append(("pair_roundtrip", p, q))
    return checked, failures
