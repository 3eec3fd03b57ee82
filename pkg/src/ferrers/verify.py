"""Cross-checks between independent routes to the same counts.

Each check returns ``None`` on success or a short counterexample string.
The checks look functions up through their modules at call time, so a
test can monkeypatch a module attribute and watch the harness fail.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterator, Optional

from . import christoffel, core, decomposition, formulas, kreweras, oracle
from .core import Diagram, Lattice


def diagrams_up_to(max_cells: int) -> Iterator[Diagram]:
    for n in range(max_cells + 1):
        for parts in formulas.partitions(n):
            yield Diagram(parts)


def lattices(max_side: int) -> Iterator[Lattice]:
    for a in range(1, max_side + 1):
        for b in range(1, max_side + 1):
            yield Lattice(a, b)


def check_oracle_equivalence(max_cells, max_lattice):
    for d in diagrams_up_to(max_cells):
        got, want = decomposition.count(d), oracle.count_contained(d)
        if got != want:
            return f"count{d.code()} = {got}, oracle says {want}"


def check_split_identity(max_cells, max_lattice):
    for d in diagrams_up_to(max_cells):
        if not d:
            continue
        total = oracle.count_contained(d)
        for c in decomposition.corners(d):
            s = decomposition.split_at(d, c)
            parts = oracle.count_contained(s.removed) + oracle.count_contained(
                s.upper_factor
            ) * oracle.count_contained(s.lower_factor)
            if parts != total:
                return f"split of {d.code()} at row {c.row}: {parts} != {total}"


def check_alternative_identity(max_cells, max_lattice):
    for d in diagrams_up_to(max_cells):
        n, sub = decomposition.decompose_alternative(d)
        if formulas.catalan(n) != decomposition.count(d) + sub.value():
            return f"alternative for {d.code()}: C{n} != count + ({sub})"


def check_word_round_trip(max_cells, max_lattice):
    for lat in lattices(max_lattice):
        for w in oracle.enumerate_dyck_words(lat):
            back = core.diagram_to_word(core.word_to_diagram(w, lat), lat)
            if back != w:
                return f"{w} -> {back} in {lat.a}x{lat.b}"


def check_word_enumeration(max_cells, max_lattice):
    for lat in lattices(max_lattice):
        words = oracle.enumerate_dyck_words(lat)
        want = oracle.count_contained(christoffel.christoffel_diagram(lat))
        if len(words) != want:
            return f"{lat.a}x{lat.b}: {len(words)} words, {want} diagrams"


def check_bizley(max_cells, max_lattice):
    for lat in lattices(max_lattice):
        want = oracle.count_contained(christoffel.christoffel_diagram(lat))
        got = formulas.bizley_count(lat.a, lat.b)
        if got != want:
            return f"bizley_count({lat.a}, {lat.b}) = {got}, oracle says {want}"
        if gcd(lat.a, lat.b) == 1 and formulas.general_catalan(lat.a, lat.b) != got:
            return f"general_catalan({lat.a}, {lat.b}) disagrees with bizley"


def check_christoffel_cells(max_cells, max_lattice):
    for lat in lattices(max_lattice):
        cells = christoffel.christoffel_diagram(lat).cells
        if christoffel.q_cells(lat) != cells:
            return f"q_cells({lat.a}, {lat.b}) = {christoffel.q_cells(lat)}, diagram has {cells}"


def check_comparison(max_cells, max_lattice):
    for a in range(2, max_lattice + 1):
        for b in range(a, 2 * max_lattice + 1):
            lo, hi = Lattice(a, b), Lattice(a, b + 1)
            want = oracle.count_contained(
                christoffel.christoffel_diagram(hi)
            ) - oracle.count_contained(christoffel.christoffel_diagram(lo))
            got = christoffel.comparison_difference(lo, hi)
            if got != want:
                return f"{a}x{b} -> {a}x{b + 1}: {got}, oracle says {want}"


def check_branch_sizes(max_cells, max_lattice):
    for lat in lattices(max_lattice):
        g = kreweras.build_poset(lat)
        for d in g.nodes:
            size = len(kreweras.branch(g, d))
            if size != decomposition.count(d):
                return f"branch {d.code()} of {lat.a}x{lat.b} has {size} nodes"


CHECKS: list[tuple[str, Callable]] = [
    ("oracle equivalence", check_oracle_equivalence),
    ("split identity", check_split_identity),
    ("alternative identity", check_alternative_identity),
    ("word round trip", check_word_round_trip),
    ("word enumeration", check_word_enumeration),
    ("bizley vs oracle", check_bizley),
    ("christoffel cells", check_christoffel_cells),
    ("comparison method", check_comparison),
    ("branch sizes", check_branch_sizes),
]


@dataclass
class CheckOutcome:
    name: str
    counterexample: Optional[str]

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def run_checks(max_cells: int, max_lattice: int) -> list[CheckOutcome]:
    return [CheckOutcome(name, fn(max_cells, max_lattice)) for name, fn in CHECKS]
