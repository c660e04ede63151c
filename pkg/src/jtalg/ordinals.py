"""Ordinals below w*K in limit-plus-offset form.

An Ord is a pair (limit_index, offset) denoting w*limit_index + offset;
limit_index 0 is the base copy of the naturals.  The order is lexicographic,
which is the ordinal order.  Literals read and print as

    "N"  |  "w"  |  "w+N"  |  "w*A"  |  "w*A+N"

with decimal naturals A >= 1, N >= 0 ("w" and "w+0" both denote w).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

__all__ = ["Ord", "parse_ord", "format_ord", "OrdinalSyntaxError"]


class OrdinalSyntaxError(ValueError):
    pass


@total_ordering
@dataclass(frozen=True, slots=True)
class Ord:
    limit_index: int
    offset: int

    def __post_init__(self) -> None:
        if self.limit_index < 0 or self.offset < 0:
            raise ValueError("ordinal parts must be naturals")

    @property
    def is_base(self) -> bool:
        return self.limit_index == 0

    def limit_part(self) -> "Ord":
        return Ord(self.limit_index, 0)

    def plus(self, k: int) -> "Ord":
        return Ord(self.limit_index, self.offset + k)

    def __lt__(self, other: "Ord") -> bool:
        if not isinstance(other, Ord):
            return NotImplemented
        return (self.limit_index, self.offset) < (other.limit_index, other.offset)

    def __str__(self) -> str:
        return format_ord(self)

    def __repr__(self) -> str:
        return f"Ord({format_ord(self)!r})"


_ORD_RE = re.compile(r"^(?:(?P<fin>\d+)|w(?:\*(?P<a>\d+))?(?:\+(?P<n>\d+))?)$")


def parse_ord(text: str) -> Ord:
    """Parse an ordinal literal; raises OrdinalSyntaxError otherwise."""
    m = _ORD_RE.match(text.strip())
    if m is None:
        raise OrdinalSyntaxError(
            f"bad ordinal literal {text!r}: expected N, w, w+N, w*A or w*A+N")
    if m["fin"] is not None:
        return Ord(0, int(m["fin"]))
    a = int(m["a"]) if m["a"] is not None else 1
    if a < 1:
        raise OrdinalSyntaxError(f"bad ordinal literal {text!r}: w*0 is not a limit")
    return Ord(a, int(m["n"]) if m["n"] is not None else 0)


def format_ord(o: Ord) -> str:
    if o.limit_index == 0:
        return str(o.offset)
    if o.limit_index == 1:
        return "w" if o.offset == 0 else f"w+{o.offset}"
    if o.offset == 0:
        return f"w*{o.limit_index}"
    return f"w*{o.limit_index}+{o.offset}"
