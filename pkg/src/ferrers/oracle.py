"""Brute-force ground truth for path counts.

Nothing here knows about Catalan numbers or the decomposition: counts come
from a prefix-sum recurrence over row lengths, and the explicit
enumerations materialise every partition or word for small cases.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Diagram, Lattice, is_dyck, word_to_diagram
from .errors import BudgetExceeded


@dataclass(frozen=True)
class EnumerationBudget:
    max_cells: int = 64


DEFAULT_BUDGET = EnumerationBudget()


def count_contained(d: Diagram) -> int:
    """Number of partitions fitting inside ``d``, the empty one included.

    Works bottom row first: ``ways[v]`` is the number of ways to fill the
    rows below the current one when the current row has length ``v``.
    """
    rows = d.rows
    if not rows:
        return 1
    ways = [1] * (rows[-1] + 1)
    for r in reversed(rows[:-1]):
        prefix = []
        total = 0
        for w in ways:
            total += w
            prefix.append(total)
        # a row of length v allows any shorter row below it
        ways = [prefix[min(v, len(prefix) - 1)] for v in range(r + 1)]
    return sum(ways)


def count_contained_steps(d: Diagram) -> int:
    """Number of table updates :func:`count_contained` performs on ``d``."""
    return sum(r + 1 for r in d.rows)


def _contained(rows: tuple[int, ...], cap: int) -> list[tuple[int, ...]]:
    if not rows:
        return [()]
    out = []
    for first in range(min(rows[0], cap) + 1):
        for rest in _contained(rows[1:], first):
            out.append((first,) + rest)
    return out


def enumerate_contained(d: Diagram, budget: EnumerationBudget = DEFAULT_BUDGET) -> list[Diagram]:
    """Every partition inside ``d``, sorted lexicographically by row tuple."""
    if d.cells > budget.max_cells:
        raise BudgetExceeded(f"{d} has {d.cells} cells, budget is {budget.max_cells}")
    found = {Diagram(rows) for rows in _contained(d.rows, d.row(1))}
    return sorted(found)


def enumerate_dyck_words(lat: Lattice, budget: EnumerationBudget = DEFAULT_BUDGET) -> list[str]:
    """All words of the lattice whose path stays weakly below the diagonal."""
    if lat.a * lat.b > 2 * budget.max_cells:
        raise BudgetExceeded(f"{lat.a}x{lat.b} lattice exceeds budget {budget.max_cells}")
    n = lat.a + lat.b
    words = []
    for ones in combinations(range(n), lat.b):
        letters = ["0"] * n
        for i in ones:
            letters[i] = "1"
        w = "".join(letters)
        if is_dyck(word_to_diagram(w, lat), lat):
            words.append(w)
    return sorted(words)
