"""Lattices, Ferrers diagrams and Dyck words, and the coding between them.

A Dyck word of the ``a x b`` lattice is a string over ``"01"`` read from the
top-left corner ``(0, a)``: ``0`` steps south, ``1`` steps east.  The
Ferrers diagram of the word is the set of cells left of the path.  Row
lengths are stored longest first, so the bottom row of the drawing comes
first::

    >>> word_to_diagram("01011011", Lattice(3, 5))
    Diagram(rows=(3, 1))
    >>> diagram_to_word(Diagram((3, 1)), Lattice(3, 5))
    '01011011'
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .errors import (
    DiagramExceedsLattice,
    DiagramSyntaxError,
    InvalidSize,
    LetterCountMismatch,
    NegativeEntry,
    NonMonotoneInput,
)


@dataclass(frozen=True)
class Lattice:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise InvalidSize(f"lattice sides must be positive, got {self.a}x{self.b}")


@dataclass(frozen=True, order=True)
class Diagram:
    """A Ferrers diagram as weakly decreasing row lengths, longest first.

    Trailing zeros are dropped on construction, so ``Diagram((3, 1, 0))``
    and ``Diagram((3, 1))`` compare equal.  The empty diagram is
    ``Diagram(())``.
    """

    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if any(r < 0 for r in rows):
            raise NegativeEntry(f"negative row length in {rows}")
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise NonMonotoneInput(f"rows must be weakly decreasing: {rows}")
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)

    @classmethod
    def _trusted(cls, rows: tuple[int, ...]) -> "Diagram":
        # caller guarantees a weakly decreasing tuple without trailing zeros
        d = object.__new__(cls)
        object.__setattr__(d, "rows", rows)
        return d

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def __bool__(self):
        return bool(self.rows)

    @property
    def cells(self) -> int:
        return sum(self.rows)

    def row(self, i: int) -> int:
        """Length of the 1-based row ``i``; zero past the last row."""
        return self.rows[i - 1] if 1 <= i <= len(self.rows) else 0

    def contains(self, other: "Diagram") -> bool:
        """True when ``other`` fits inside ``self`` cell by cell."""
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other.rows, self.rows))

    def code(self) -> str:
        """Bracket code such as ``[4,3,1]``; ``[]`` for the empty diagram."""
        return "[" + ",".join(map(str, self.rows)) + "]"

    def __str__(self):
        return self.code()


EMPTY = Diagram(())


class CellRef(NamedTuple):
    """A cell addressed by 1-based row index (longest row is 1) and column."""

    row: int
    col: int


def parse_diagram(text: str) -> Diagram:
    """Parse comma-separated row lengths in either monotone order.

    >>> parse_diagram("1,3,4")
    Diagram(rows=(4, 3, 1))
    """
    text = text.strip()
    if not text:
        return EMPTY
    tokens = [t.strip() for t in text.strip("[](){}").split(",")]
    try:
        values = [int(t) for t in tokens if t]
    except ValueError as exc:
        raise DiagramSyntaxError(f"not a list of integers: {text!r}") from exc
    if any(v < 0 for v in values):
        raise NegativeEntry(f"negative row length in {text!r}")
    pairs = list(zip(values, values[1:]))
    if all(x >= y for x, y in pairs):
        return Diagram(values)
    if all(x <= y for x, y in pairs):
        return Diagram(values[::-1])
    raise NonMonotoneInput(f"row lengths are not monotone: {text!r}")


def staircase_of(n: int) -> Diagram:
    """The isosceles diagram ``(n-1, ..., 1)``; its paths number Catalan(n)."""
    if n < 1:
        raise InvalidSize(f"staircase size must be positive, got {n}")
    return Diagram(range(n - 1, 0, -1))


def is_staircase(d: Diagram) -> Optional[int]:
    """Return ``n`` when ``d`` is the staircase of size ``n``, else None."""
    k = len(d.rows)
    if d.rows == tuple(range(k, 0, -1)):
        return k + 1
    return None


def min_enclosing_staircase(d: Diagram) -> int:
    """Least ``n`` whose staircase contains ``d``."""
    return max([1] + [r + i for i, r in enumerate(d.rows, start=1)])


def _check_word(w: str, lat: Lattice):
    if set(w) - {"0", "1"}:
        raise LetterCountMismatch(f"word must be over '01': {w!r}")
    if w.count("0") != lat.a or w.count("1") != lat.b:
        raise LetterCountMismatch(
            f"{w!r} has {w.count('0')} zeros and {w.count('1')} ones, "
            f"lattice needs {lat.a} and {lat.b}"
        )


def word_to_diagram(w: str, lat: Lattice) -> Diagram:
    _check_word(w, lat)
    east = 0
    lengths = []
    for letter in w:
        if letter == "1":
            east += 1
        else:
            lengths.append(east)
    return Diagram(reversed(lengths))


def diagram_to_word(d: Diagram, lat: Lattice) -> str:
    if len(d) > lat.a or d.row(1) > lat.b:
        raise DiagramExceedsLattice(f"{d} does not fit in {lat.a}x{lat.b}")
    # rows read top to bottom = shortest first, padded to a rows
    lengths = [0] * (lat.a - len(d)) + list(reversed(d.rows))
    parts = []
    east = 0
    for length in lengths:
        parts.append("1" * (length - east) + "0")
        east = length
    parts.append("1" * (lat.b - east))
    return "".join(parts)


def is_dyck(d: Diagram, lat: Lattice) -> bool:
    """True when ``d`` codes a path staying weakly below the lattice diagonal."""
    if len(d) > lat.a - 1:
        return False
    # row i (longest first) sits l = a - i rows above the bottom edge
    return all(r <= (lat.a - i) * lat.b // lat.a for i, r in enumerate(d.rows, start=1))
