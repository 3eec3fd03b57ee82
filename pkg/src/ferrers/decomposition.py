"""Recursive splitting of a Ferrers diagram into staircases.

Pick a corner cell of ``d`` in row ``i`` (row length ``v``).  A partition
inside ``d`` either stops short of the corner, in which case it lies inside
``d`` with that cell removed, or reaches it.  Partitions that reach the
corner have every longer row at least ``v`` and every shorter row free, so
they factor into a partition of the rows above (shifted left by ``v``) and
a partition of the rows below.  Repeating until every piece is a staircase
``(n-1, ..., 1)``, whose count is Catalan(n), turns ``d`` into a polynomial
in Catalan numbers.

>>> str(decompose(Diagram((5, 4, 2, 1))))
'C5 + C4 + C3*C2'
>>> count(Diagram((2, 2, 1)))
9
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable

from .core import CellRef, Diagram, is_staircase, min_enclosing_staircase, staircase_of
from .formulas import catalan
from .errors import AlreadyStaircase, EmptyDiagram, NotACorner
from .polynomial import CatalanPolynomial, evaluate

CornerRule = Callable[[Diagram], CellRef]


@dataclass(frozen=True)
class SplitResult:
    removed: Diagram
    upper_factor: Diagram
    lower_factor: Diagram
    corner: CellRef


def corners(d: Diagram) -> list[CellRef]:
    if not d:
        raise EmptyDiagram("the empty diagram has no corners")
    return [CellRef(i, d.row(i)) for i in range(1, len(d) + 1) if d.row(i) > d.row(i + 1)]


def canonical_corner(d: Diagram) -> CellRef:
    """Topmost corner sticking out of the staircase with as many rows as ``d``.

    Falls back to the topmost corner overall when nothing sticks out.
    """
    if not d:
        raise EmptyDiagram("the empty diagram has no corners")
    if is_staircase(d):
        raise AlreadyStaircase(f"{d} is already a staircase")
    k = len(d)
    found = corners(d)
    excess = [c for c in found if c.col > k + 1 - c.row]
    return (excess or found)[-1]


def split_at(d: Diagram, c: CellRef) -> SplitResult:
    i = c.row
    if not d or not 1 <= i <= len(d) or d.row(i) != c.col or d.row(i) <= d.row(i + 1):
        raise NotACorner(f"{tuple(c)} is not a corner of {d}")
    v = d.row(i)
    rows = d.rows
    shrunk = rows[: i - 1] + (v - 1,) + rows[i:] if v > 1 else rows[: i - 1]
    upper = tuple(r - v for r in rows[: i - 1])
    while upper and upper[-1] == 0:
        upper = upper[:-1]
    return SplitResult(
        Diagram._trusted(shrunk), Diagram._trusted(upper), Diagram._trusted(rows[i:]), CellRef(i, v)
    )


class Decomposer:
    """Runs the recursion with a chosen corner rule, counting splits.

    ``memoize`` caches finished sub-results keyed on the diagram.  The cache
    only ever receives fully built, immutable values, so concurrent readers
    never see partial entries; ``splits`` is only meaningful single-threaded.
    """

    def __init__(self, corner_rule: CornerRule = canonical_corner, memoize: bool = True):
        self.corner_rule = corner_rule
        self.memoize = memoize
        self.splits = 0
        self._poly: dict[Diagram, CatalanPolynomial] = {}
        self._count: dict[Diagram, int] = {}
        self._lock = threading.Lock()

    def decompose(self, d: Diagram) -> CatalanPolynomial:
        if self.memoize:
            hit = self._poly.get(d)
            if hit is not None:
                return hit
        n = is_staircase(d)
        if n is not None:
            result = CatalanPolynomial.staircase(n)
        else:
            s = split_at(d, self.corner_rule(d))
            self.splits += 1
            result = self.decompose(s.removed) + self.decompose(s.upper_factor) * self.decompose(
                s.lower_factor
            )
        if self.memoize:
            with self._lock:
                self._poly.setdefault(d, result)
        return result

    def count(self, d: Diagram) -> int:
        """Like ``evaluate(decompose(d))`` but carrying integers, not polynomials."""
        if self.memoize:
            hit = self._count.get(d)
            if hit is not None:
                return hit
        n = is_staircase(d)
        if n is not None:
            result = catalan(n)
        else:
            s = split_at(d, self.corner_rule(d))
            self.splits += 1
            result = self.count(s.removed) + self.count(s.upper_factor) * self.count(s.lower_factor)
        if self.memoize:
            with self._lock:
                self._count.setdefault(d, result)
        return result


_default = Decomposer()


def decompose(d: Diagram) -> CatalanPolynomial:
    return _default.decompose(d)


def count(d: Diagram) -> int:
    return evaluate(_default.decompose(d))


def count_through_cell(d: Diagram, c: CellRef) -> int:
    """Partitions inside ``d`` that contain the corner cell ``c``."""
    s = split_at(d, c)
    return count(s.upper_factor) * count(s.lower_factor)


def decompose_alternative(d: Diagram) -> tuple[int, CatalanPolynomial]:
    """Express ``d`` as ``C_n`` minus a polynomial, ``n`` the smallest enclosing staircase.

    Cells of the staircase outside ``d`` are peeled off one corner at a time
    (longest row index first); each peel removes the partitions through that
    cell, which are collected in the returned polynomial.  Always
    ``catalan(n) == count(d) + evaluate(subtracted)``.
    """
    n = min_enclosing_staircase(d)
    current = staircase_of(n)
    peeled = []
    while current != d:
        cur, want = current.rows, d.rows + (0,) * (len(current) - len(d))
        i = max(i for i in range(len(cur)) if cur[i] > want[i]) + 1
        s = split_at(current, CellRef(i, cur[i - 1]))
        peeled.append(decompose(s.upper_factor) * decompose(s.lower_factor))
        current = s.removed
    return n, CatalanPolynomial(term for p in peeled for term in p)


def format_alternative(n: int, subtracted: CatalanPolynomial) -> str:
    head = str(CatalanPolynomial.staircase(n))
    if not subtracted:
        return head
    return f"{head} - ({subtracted})"


def clear_cache():
    global _default
    _default = Decomposer()
