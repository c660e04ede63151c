"""Pure-Python equational-closure oracle; twin of the compiled version.

Explores the bidirectional rewrite closure of a term under the three
axioms, breadth first, keeping every term whose size stays within the cap,
and reports the minimum product count seen.  The erasing rules applied
backwards must invent the erased side; inventions are the single reserved
variable ``$``, which keeps branching finite and cannot hide a smaller
product count (forward steps are never blocked by the cap when the start
fits, so the full forward closure is always explored).

Terms are nested tuples, independent of the package Term type:
("v", name) | ("l", t) | ("r", t) | ("m", a, b).
"""

from __future__ import annotations

from collections import deque

__all__ = ["closure_min_mults", "closure_size", "term_to_tuple"]


def term_to_tuple(t):
    """Convert a package Term to the oracle's tuple representation."""
    from .terms import L, Mul, R, Var

    if isinstance(t, Var):
        return ("v", t.name)
    if isinstance(t, L):
        return ("l", term_to_tuple(t.arg))
    if isinstance(t, R):
        return ("r", term_to_tuple(t.arg))
    return ("m", term_to_tuple(t.left), term_to_tuple(t.right))


def _sizes(u, memo):
    s = memo.get(u)
    if s is None:
        if u[0] == "v":
            s = 1
        elif u[0] == "m":
            s = 1 + _sizes(u[1], memo) + _sizes(u[2], memo)
        else:
            s = 1 + _sizes(u[1], memo)
        memo[u] = s
    return s


def _mults(u):
    if u[0] == "v":
        return 0
    if u[0] == "m":
        return 1 + _mults(u[1]) + _mults(u[2])
    return _mults(u[1])


def _explore(start, cap):
    memo: dict = {}
    seen = {start}
    queue = deque([start])
    best = _mults(start)
    invented = ("v", "$")
    while queue:
        t = queue.popleft()
        total = _sizes(t, memo)
        out: list = []

        def rec(u, rebuild):
            tag = u[0]
            su = _sizes(u, memo)
            if tag == "l" and u[1][0] == "m":
                out.append(rebuild(u[1][1]))
            elif tag == "r" and u[1][0] == "m":
                out.append(rebuild(u[1][2]))
            elif tag == "m" and u[1][0] == "l" and u[2][0] == "r" and u[1][1] == u[2][1]:
                out.append(rebuild(u[1][1]))
            if total + su + 3 <= cap:
                out.append(rebuild(("m", ("l", u), ("r", u))))
            if total + 3 <= cap:
                out.append(rebuild(("l", ("m", u, invented))))
                out.append(rebuild(("r", ("m", invented, u))))
            if tag == "m":
                left, right = u[1], u[2]
                rec(left, lambda s: rebuild(("m", s, right)))
                rec(right, lambda s: rebuild(("m", left, s)))
            elif tag != "v":
                inner = u[1]
                rec(inner, lambda s: rebuild((tag, s)))

        rec(t, lambda s: s)
        for v in out:
            if v not in seen:
                seen.add(v)
                queue.append(v)
                m = _mults(v)
                if m < best:
                    best = m
    return best, len(seen)


def closure_min_mults(term, cap: int) -> int:
    """Minimum product count over the capped closure of a tuple term."""
    return _explore(term, cap)[0]


def closure_size(term, cap: int) -> int:
    """Number of terms in the capped closure (diagnostics and tests)."""
    return _explore(term, cap)[1]
