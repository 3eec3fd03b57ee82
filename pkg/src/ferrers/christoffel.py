"""Christoffel diagrams of a lattice and the column-by-column comparison.

Widening an ``a x (b-1)`` lattice to ``a x b`` adds at most one cell per
row to the Christoffel diagram.  The new paths are exactly those through
at least one added cell; grouping them by the longest-row added cell they
use gives disjoint classes, each counted as a product of two smaller
diagrams.
"""
from __future__ import annotations

from math import gcd

from .core import CellRef, Diagram, Lattice, diagram_to_word
from .decomposition import count_through_cell
from .errors import DomainViolation, UnsupportedGap


def christoffel_diagram(lat: Lattice) -> Diagram:
    a, b = lat.a, lat.b
    return Diagram(l * b // a for l in range(a - 1, 0, -1))


def christoffel_word(lat: Lattice) -> str:
    return diagram_to_word(christoffel_diagram(lat), lat)


def q_cells(lat: Lattice) -> int:
    """Cell count of the Christoffel diagram, ``((a-1)(b-1) + gcd(a,b) - 1) / 2``."""
    a, b = lat.a, lat.b
    num = (a - 1) * (b - 1) + gcd(a, b) - 1
    assert num % 2 == 0
    return num // 2


def delta(lat: Lattice, l: int) -> int:
    """``floor(bl/a) - floor((b-1)l/a)``, defined for ``a < b`` and ``1 <= l < a``."""
    a, b = lat.a, lat.b
    if not a < b or not 1 <= l <= a - 1:
        raise DomainViolation(f"delta needs a < b and 1 <= l < a, got a={a}, b={b}, l={l}")
    return b * l // a - (b - 1) * l // a


def _check_step(lat_from: Lattice, lat_to: Lattice):
    if lat_from.a != lat_to.a:
        raise UnsupportedGap(f"row counts differ: {lat_from.a} vs {lat_to.a}")
    if lat_to.b - lat_from.b != 1:
        raise UnsupportedGap(
            f"only single-column steps are supported, got {lat_from.b} -> {lat_to.b}"
        )
    if not lat_to.a < lat_to.b:
        raise DomainViolation(f"comparison needs a < b, got {lat_to.a}x{lat_to.b}")


def excess_cells(lat_from: Lattice, lat_to: Lattice) -> list[CellRef]:
    """Cells of the wider Christoffel diagram missing from the narrower one,
    shortest row first."""
    _check_step(lat_from, lat_to)
    a, b = lat_to.a, lat_to.b
    cells = []
    for l in range(1, a):
        if delta(lat_to, l):
            cells.append(CellRef(a - l, b * l // a))
    return cells


def comparison_difference(lat_from: Lattice, lat_to: Lattice) -> int:
    """How many more Dyck paths ``lat_to`` has than ``lat_from``.

    Computed from the excess cells alone, never by counting either lattice.
    """
    cells = excess_cells(lat_from, lat_to)
    rows = list(christoffel_diagram(lat_to).rows)
    gained = 0
    # peel cells longest row first; each is a corner once the longer ones are gone
    for cell in reversed(cells):
        current = Diagram(rows)
        gained += count_through_cell(current, cell)
        rows[cell.row - 1] -= 1
    return gained
