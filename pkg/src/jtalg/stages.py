"""Stagewise extension of the pairing table from w*a to w*a + w.

Each stage takes the algebra already defined below a limit lam = w*a and
extends it to lam + w.  Even offsets are placed by closed formulas:

    r(lam + n) = lam + n + 2                      for every even n
    l(lam + n) = lam + (n - 2) / 4                for n = 2 (mod 4)
    l(lam + n) = e_lam(n / 4)                     for n = 0 (mod 4)

where e_lam(j) = w*(j mod a) + (j div a) is the canonical bijection from
the naturals onto lam.  The odd offsets are partitioned into blocks L_m by
anti-diagonals of widths 2, 3, 4, ...; block L_m fills the L-shaped region
of cells (head, alpha) and (alpha, head) for head = lam + m, alpha <= head,
in a fixed walk order, skipping the one cell already holding an even value.

Everything is a total formula of the cell or the value, so a stage table
never needs to exist in memory; StageAlgebra memoizes the region walks so
that projections of odd values cost one walk the first time and a lookup
afterwards.  All answers are deterministic, and the table for K stages
restricted to K-1 stages is the K-1 table by construction (verified, not
assumed, by ``verify``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from math import isqrt
from typing import Iterator

from .algebra import JTAlgebraHandle, check_axioms
from .kernel import jw_mul, jw_unpair
from .ordinals import Ord

__all__ = [
    "ParityClass", "classify", "lset_locate", "lset_element",
    "e_bijection", "e_bijection_inv", "cell_even_occupant",
    "region_cells", "region_cell", "region_index",
    "StageAlgebra", "StageReport",
]

Cell = tuple[Ord, Ord]


class ParityClass(Enum):
    BASE = "base"
    EVEN_0_MOD_4 = "even0"
    EVEN_2_MOD_4 = "even2"
    ODD = "odd"


def classify(o: Ord) -> ParityClass:
    if o.is_base:
        return ParityClass.BASE
    if o.offset % 2 == 1:
        return ParityClass.ODD
    return ParityClass.EVEN_0_MOD_4 if o.offset % 4 == 0 else ParityClass.EVEN_2_MOD_4


def e_bijection(a: int, j: int) -> Ord:
    """The canonical bijection from the naturals onto w*a (a >= 1)."""
    return Ord(j % a, j // a)


def e_bijection_inv(a: int, o: Ord) -> int:
    if o.limit_index >= a:
        raise ValueError(f"{o} is not below w*{a}")
    return o.offset * a + o.limit_index


def _block_start(k: int) -> int:
    # S(k) = k(k+3)/2: first anti-diagonal index of row k+1 of the partition
    return k * (k + 3) // 2


def lset_locate(o: Ord) -> tuple[int, int]:
    """Block and in-block index of an odd offset: the odd value w*a + n with
    n = 2t + 1 lies in block L_m at index i, where consecutive t fill rows
    of widths 2, 3, 4, ... and column m of that triangle is block L_m."""
    if classify(o) is not ParityClass.ODD:
        raise ValueError(f"{o} is not an odd stage ordinal")
    t = (o.offset - 1) // 2
    k = (isqrt(8 * t + 9) - 1) // 2
    while _block_start(k - 1) > t:
        k -= 1
    while _block_start(k) <= t:
        k += 1
    m = t - _block_start(k - 1)
    return m, k - max(m, 1)


def lset_element(a: int, m: int, i: int) -> Ord:
    """The i-th element of block L_m at stage w*a; inverse of lset_locate."""
    k = max(m, 1) + i
    return Ord(a, 2 * (_block_start(k - 1) + m) + 1)


def _even_left(v: Ord) -> Ord:
    """Row header of an even stage value, by the placement formulas."""
    if v.offset % 4 == 0:
        return e_bijection(v.limit_index, v.offset // 4)
    return Ord(v.limit_index, (v.offset - 2) // 4)


def cell_even_occupant(cell: Cell) -> Ord | None:
    """The even value placed at this cell, if any.  Even values sit at
    (l(v), v + 2), so only the column determines the candidate."""
    row, col = cell
    if col.is_base or col.offset < 2 or col.offset % 2 == 1:
        return None
    v = Ord(col.limit_index, col.offset - 2)
    return v if _even_left(v) == row else None


def _alpha_sequence(head: Ord) -> Iterator[Ord]:
    """Row/column headers of head's region in the canonical walk order:
    the stage ordinals up to head, then everything below the stage limit
    in e_lam order."""
    for j in range(head.offset + 1):
        yield Ord(head.limit_index, j)
    for t in itertools.count():
        yield e_bijection(head.limit_index, t)


def region_cells(head: Ord) -> Iterator[Cell]:
    """Cells of head's L-shaped region available to odd values, in order.

    For each alpha the walk emits (head, alpha) then (alpha, head), the
    corner once, and skips the cell already occupied by an even value.
    """
    if head.is_base:
        raise ValueError("regions exist only above the first limit")
    for alpha in _alpha_sequence(head):
        cells = ((head, head),) if alpha == head else ((head, alpha), (alpha, head))
        for cell in cells:
            if cell_even_occupant(cell) is None:
                yield cell


def region_cell(head: Ord, i: int) -> Cell:
    """The i-th available cell of head's region."""
    return next(itertools.islice(region_cells(head), i, None))


def region_index(head: Ord, cell: Cell) -> int:
    """Position of an available cell in head's walk; inverse of region_cell.

    Computed arithmetically: the raw walk position counts two cells per
    alpha (one at the corner), and at most one earlier cell is skipped for
    the even occupant of the region.
    """
    a, n = head.limit_index, head.offset
    row, col = cell

    def alpha_index(alpha: Ord) -> int:
        if alpha.limit_index == a:
            if alpha.offset > n:
                raise ValueError(f"cell {cell} is outside region {head}")
            return alpha.offset
        return n + 1 + e_bijection_inv(a, alpha)

    def raw_of(j: int, side: int) -> int:
        if j < n:
            return 2 * j + side
        if j == n:
            return 2 * n
        return 2 * j - 1 + side

    if row == head and col == head:
        raw = 2 * n
    elif row == head:
        raw = raw_of(alpha_index(col), 0)
    elif col == head:
        raw = raw_of(alpha_index(row), 1)
    else:
        raise ValueError(f"cell {cell} is not in region {head}")

    if n >= 2 and n % 2 == 0:
        even_row = _even_left(Ord(a, n - 2))
        if even_row == row and col == head:
            raise ValueError(f"cell {cell} holds the even value w*{a}+{n - 2}")
        raw_e = raw_of(alpha_index(even_row), 1)
        if raw_e < raw:
            raw -= 1
    return raw


@dataclass(frozen=True)
class StageReport:
    stages: int
    window: int
    sections: tuple[tuple[str, int, tuple], ...]   # (name, checked, failures)
    max_even_per_region: int

    @property
    def ok(self) -> bool:
        return all(not fails for _, _, fails in self.sections)

    def to_json(self) -> dict:
        return {
            "stages": self.stages,
            "window": self.window,
            "sections": [
                {"name": name, "checked": checked, "failures": [str(f) for f in fails]}
                for name, checked, fails in self.sections
            ],
            "max_even_per_region": self.max_even_per_region,
            "ok": self.ok,
        }


class StageAlgebra:
    """The table truncated to ordinals below w*K.

    Operations are pure; the instance only caches region walks and cell
    placements, which are deterministic, so concurrent readers always
    agree (dictionary updates are atomic and idempotent).
    """

    def __init__(self, stages: int):
        if stages < 1:
            raise ValueError("need at least one stage")
        self.stages = stages
        self._regions: dict[Ord, tuple[Cell, ...]] = {}
        self._cell_of: dict[Ord, Cell] = {}
        self._value_at: dict[Cell, Ord] = {}

    # -- carrier ----------------------------------------------------------

    def contains(self, v) -> bool:
        return isinstance(v, Ord) and v.limit_index < self.stages

    def _check(self, o: Ord) -> Ord:
        if not self.contains(o):
            raise ValueError(f"{o!r} is not below w*{self.stages}")
        return o

    def probe(self, i: int, window: int) -> Ord:
        if not 0 <= i < self.stages * window:
            raise IndexError(f"probe index {i} outside {self.stages} stages of {window}")
        return Ord(i // window, i % window)

    # -- region materialization -------------------------------------------

    def _region_prefix(self, head: Ord, count: int) -> tuple[Cell, ...]:
        cells = self._regions.get(head)
        if cells is None or len(cells) < count:
            want = max(count, 2 * len(cells or ()), 16)
            cells = tuple(itertools.islice(region_cells(head), want))
            self._regions[head] = cells
        return cells

    def _record(self, cell: Cell, value: Ord) -> None:
        self._cell_of[value] = cell
        self._value_at[cell] = value

    def _odd_cell(self, o: Ord) -> Cell:
        cell = self._cell_of.get(o)
        if cell is None:
            m, i = lset_locate(o)
            cell = self._region_prefix(Ord(o.limit_index, m), i + 1)[i]
            self._record(cell, o)
        return cell

    def cell_of(self, o: Ord) -> Cell:
        """The unique cell whose entry is o."""
        self._check(o)
        parity = classify(o)
        if parity is ParityClass.BASE:
            p, q = jw_unpair(o.offset)
            return (Ord(0, p), Ord(0, q))
        if parity is ParityClass.ODD:
            return self._odd_cell(o)
        return (_even_left(o), Ord(o.limit_index, o.offset + 2))

    # -- operations --------------------------------------------------------

    def mul(self, p: Ord, q: Ord) -> Ord:
        self._check(p)
        self._check(q)
        if p.is_base and q.is_base:
            return Ord(0, jw_mul(p.offset, q.offset))
        cell = (p, q)
        cached = self._value_at.get(cell)
        if cached is not None:
            return cached
        even = cell_even_occupant(cell)
        if even is not None:
            self._record(cell, even)
            return even
        head = max(p, q)
        value = lset_element(head.limit_index, head.offset,
                             region_index(head, cell))
        self._record(cell, value)
        return value

    def left(self, o: Ord) -> Ord:
        return self.cell_of(o)[0]

    def right(self, o: Ord) -> Ord:
        return self.cell_of(o)[1]

    def unpair(self, o: Ord) -> Cell:
        return self.cell_of(o)

    def descent_step(self, o: Ord) -> Ord:
        """One step of the offset descent; strictly decreases the offset."""
        self._check(o)
        if o.is_base:
            raise ValueError("descent steps apply above the first limit")
        if o.offset == 0:
            raise ValueError(f"{o} is already at its limit")
        parity = classify(o)
        if parity is ParityClass.ODD:
            m, _ = lset_locate(o)
            return Ord(o.limit_index, m)
        if parity is ParityClass.EVEN_2_MOD_4:
            return self.left(o)
        return self.left(self.right(o))

    def descent(self, o: Ord) -> list[Ord]:
        """Chain from o down to its limit part (or to 0 in the base)."""
        self._check(o)
        if o.is_base:
            chain = [o.offset]
            while chain[-1] != 0:
                chain.append(jw_unpair(chain[-1])[0])
            return [Ord(0, n) for n in chain]
        out = [o]
        while out[-1].offset != 0:
            out.append(self.descent_step(out[-1]))
        return out

    def handle(self, window: int) -> JTAlgebraHandle:
        """Algebra-core handle; probes run lexicographically through the
        (limit index, offset) window."""
        return JTAlgebraHandle(
            carrier_name=f"stage{self.stages}",
            mul=self.mul,
            left=self.left,
            right=self.right,
            probe_enumerator=lambda i: self.probe(i, window),
            contains=self.contains,
        )

    def dump(self, window: int) -> Iterator[tuple[Ord, Ord, Ord]]:
        """All (row, col, value) entries over the probe window, row-major."""
        probes = [self.probe(i, window) for i in range(self.stages * window)]
        for p in probes:
            for q in probes:
                yield p, q, self.mul(p, q)

    # -- verification -------------------------------------------------------

    def verify(self, window: int) -> StageReport:
        if window < 16:
            raise ValueError("window must be at least 16")
        sections: list[tuple[str, int, tuple]] = []

        axiom_report = check_axioms(self.handle(window), self.stages * window)
        sections.append(("axioms", axiom_report.checked_count, axiom_report.violations))

        sections.append(self._verify_placement(window))
        sections.append(self._verify_descent(window))
        sections.append(self._verify_coverage(window))
        sections.append(self._verify_products(window))
        sections.append(self._verify_restriction(window))

        max_even = self._max_even_per_region(window)
        evens_ok: tuple = () if max_even <= 2 else ((f"{max_even} even cells in one region"),)
        sections.append(("even_occupancy", self.stages * window, evens_ok))

        return StageReport(self.stages, window, tuple(sections), max_even)

    def _verify_placement(self, window: int) -> tuple[str, int, tuple]:
        """Every probed value sits at one cell, every touched cell holds one
        value, and the two maps are mutually inverse."""
        failures = []
        seen_cells: dict[Cell, Ord] = {}
        checked = 0
        for i in range(self.stages * window):
            v = self.probe(i, window)
            cell = self.cell_of(v)
            checked += 1
            if cell in seen_cells:
                failures.append(("cell_reused", cell, seen_cells[cell], v))
            seen_cells[cell] = v
            if self.mul(*cell) != v:
                failures.append(("not_inverse", v, cell))
        for value, cell in list(self._cell_of.items()):
            checked += 1
            if self._value_at.get(cell) != value:
                failures.append(("memo_mismatch", value, cell))
        return ("placement", checked, tuple(failures))

    def _verify_descent(self, window: int) -> tuple[str, int, tuple]:
        failures = []
        checked = 0
        for a in range(1, self.stages):
            for n in range(1, window):
                checked += 1
                chain = self.descent(Ord(a, n))
                offsets = [o.offset for o in chain]
                if chain[-1] != Ord(a, 0) or len(chain) - 1 > n:
                    failures.append(("descent", Ord(a, n), offsets))
                elif any(x <= y for x, y in zip(offsets, offsets[1:])):
                    failures.append(("descent_not_decreasing", Ord(a, n), offsets))
        return ("descent", checked, tuple(failures))

    def _verify_coverage(self, window: int) -> tuple[str, int, tuple]:
        """From each stage limit, iterating the right projection yields the
        even offsets, and the left projection over those evens reaches both
        the low stage offsets and the start of the e_lam enumeration."""
        failures = []
        checked = 0
        quarter = window // 4
        for a in range(1, self.stages):
            lam = Ord(a, 0)
            evens = [lam]
            while evens[-1].offset <= window:
                evens.append(self.right(evens[-1]))
            if [e.offset for e in evens[:window // 2]] != list(range(0, window, 2)):
                failures.append(("right_iteration", lam))
            images = {self.left(e) for e in evens}
            for j in range(quarter + 1):
                checked += 2
                if Ord(a, j) not in images:
                    failures.append(("stage_offset_unreached", Ord(a, j)))
                if e_bijection(a, j) not in images:
                    failures.append(("e_image_unreached", a, j))
        return ("coverage", checked, tuple(failures))

    def _verify_products(self, window: int) -> tuple[str, int, tuple]:
        """Products of window elements stay below limitpart(max) + w."""
        failures = []
        probes = [self.probe(i, window) for i in range(self.stages * window)]
        checked = 0
        for p in probes:
            for q in probes:
                checked += 1
                v = self.mul(p, q)
                if v.limit_index != max(p, q).limit_index:
                    failures.append(("product_escapes", p, q, v))
        return ("products_confined", checked, tuple(failures))

    def _verify_restriction(self, window: int) -> tuple[str, int, tuple]:
        """The table restricted to one stage fewer is that stage's table."""
        if self.stages == 1:
            return ("restriction", 0, ())
        smaller = StageAlgebra(self.stages - 1)
        probes = [smaller.probe(i, window) for i in range((self.stages - 1) * window)]
        failures = []
        checked = 0
        for p in probes:
            for q in probes:
                checked += 1
                mine, theirs = self.mul(p, q), smaller.mul(p, q)
                if mine != theirs:
                    failures.append(("restriction", p, q, mine, theirs))
        return ("restriction", checked, tuple(failures))

    def _max_even_per_region(self, window: int) -> int:
        per_region: dict[Ord, int] = {}
        for a in range(1, self.stages):
            for n in range(window):
                v = Ord(a, n)
                if classify(v) is ParityClass.ODD:
                    continue
                cell = self.cell_of(v)
                head = max(cell)
                per_region[head] = per_region.get(head, 0) + 1
        return max(per_region.values(), default=0)
