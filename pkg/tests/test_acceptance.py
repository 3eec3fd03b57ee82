"""Acceptance criteria, one test each.

Run under pytest for the summary section, or directly with
``python3 tests/test_acceptance.py`` to print the lines as they finish.
"""
import random
import sys
import time
from math import gcd
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from acceptance_report import LINES, criterion  # noqa: E402
from conftest import box_diagrams  # noqa: E402

from ferrers.christoffel import (  # noqa: E402
    christoffel_diagram,
    comparison_difference,
    delta,
    q_cells,
)
from ferrers.core import Diagram, Lattice, staircase_of  # noqa: E402
from ferrers.decomposition import (  # noqa: E402
    Decomposer,
    corners,
    count,
    decompose,
    decompose_alternative,
    split_at,
)
from ferrers.formulas import bizley_count, general_catalan  # noqa: E402
from ferrers.kreweras import branch, build_poset  # noqa: E402
from ferrers.oracle import count_contained, enumerate_contained  # noqa: E402
from ferrers.polynomial import CatalanPolynomial as P  # noqa: E402

GOLDEN = {
    (1, 1): 3,
    (2, 2): 6,
    (2, 2, 1): 9,
    (3, 1, 1): 10,
    (3, 2, 2): 16,
    (4, 3, 3, 1): 46,
    (5, 4, 2, 1): 66,
    (5, 5, 2, 2): 81,
    (7, 7, 2, 2): 155,
    (12, 10, 8, 7, 5, 3, 1): 14985,
}


def C(*sizes):
    return P({sizes: 1})


def test_criterion_1_golden_values():
    with criterion(1, "golden values"):
        start = time.perf_counter()
        got = {rows: Decomposer().count(Diagram(rows)) for rows in GOLDEN}
        elapsed = time.perf_counter() - start
        assert got == GOLDEN
        assert {rows: count(Diagram(rows)) for rows in GOLDEN} == GOLDEN
        assert elapsed < 1.0


def test_criterion_2_golden_polynomials():
    with criterion(2, "golden polynomials under the canonical corner"):
        assert decompose(Diagram((5, 4, 2, 1))) == C(5) + C(4) + C(3, 2)
        assert decompose(Diagram((4, 3, 1))) == C(4) + C(3) + C(2, 2)
        assert decompose_alternative(Diagram((2, 2, 1))) == (4, C(3))
        assert decompose_alternative(Diagram((3, 1, 1))) == (4, C(2, 2))


def test_criterion_3_formula_cross_validation():
    with criterion(3, "Bizley against the oracle"):
        start = time.perf_counter()
        for m in range(1, 9):
            for n in range(1, 9):
                want = count_contained(christoffel_diagram(Lattice(m, n)))
                assert bizley_count(m, n) == want, (m, n)
        assert time.perf_counter() - start < 1.0
        assert bizley_count(8, 14) == 14985
        for a in range(1, 14):
            for b in range(1, 15 - a):
                if gcd(a, b) == 1:
                    assert general_catalan(a, b) == bizley_count(a, b), (a, b)


def test_criterion_4_oracle_equivalence():
    with criterion(4, "decomposition equals oracle on all 1430 diagrams in I_8"):
        start = time.perf_counter()
        dec = Decomposer()
        ds = enumerate_contained(staircase_of(8))
        assert len(ds) == 1430
        for d in ds:
            assert dec.count(d) == count_contained(d), d
        assert time.perf_counter() - start < 5.0


def _through_cell_bijection(d, c):
    """Split the enumeration of ``d`` by the cell and check both halves."""
    s = split_at(d, c)
    inside = enumerate_contained(d)
    avoiding = [m for m in inside if m.row(c.row) < c.col]
    through = [m for m in inside if m.row(c.row) >= c.col]
    assert set(avoiding) == set(enumerate_contained(s.removed))
    # a partition using the corner has row i equal to v exactly
    pairs = set()
    for m in through:
        assert m.row(c.row) == c.col
        upper = Diagram(r - c.col for r in m.rows[: c.row - 1])
        lower = Diagram(m.rows[c.row :])
        assert s.upper_factor.contains(upper) and s.lower_factor.contains(lower)
        pairs.add((upper, lower))
    assert len(pairs) == len(through)
    assert len(pairs) == len(enumerate_contained(s.upper_factor)) * len(
        enumerate_contained(s.lower_factor)
    )


def test_criterion_5_split_identity(box6):
    with criterion(5, "split identity by explicit enumeration in a 6x6 box"):
        assert len(box6) == 924 and not box6[0]
        checked = 0
        for d in box6[1:]:
            for c in corners(d):
                _through_cell_bijection(d, c)
                checked += 1
        assert checked > 0


def test_criterion_6_corner_invariance():
    with criterion(6, "random corner choice gives the canonical value"):
        rng = random.Random(20261015)
        dec = Decomposer(lambda d: rng.choice(corners(d)), memoize=False)
        for _ in range(500):
            rows = sorted((rng.randint(0, 10) for _ in range(10)), reverse=True)
            d = Diagram(rows)
            assert dec.count(d) == count(d), d


def test_criterion_7_comparison_method():
    with criterion(7, "comparison method against oracle differences"):
        assert comparison_difference(Lattice(4, 5), Lattice(4, 6)) == 9
        for a in range(2, 7):
            for b in range(a + 1, 13):
                lo, hi = Lattice(a, b), Lattice(a, b + 1)
                want = count_contained(christoffel_diagram(hi)) - count_contained(
                    christoffel_diagram(lo)
                )
                assert comparison_difference(lo, hi) == want, (a, b)


def test_criterion_8_christoffel_identities():
    with criterion(8, "Christoffel, cell count and row difference identities"):
        assert christoffel_diagram(Lattice(8, 14)).rows == (12, 10, 8, 7, 5, 3, 1)
        for a in range(1, 41):
            for b in range(1, 41):
                lat = Lattice(a, b)
                assert q_cells(lat) == christoffel_diagram(lat).cells, (a, b)
        for a in range(2, 21):
            for b in range(a + 1, 21):
                wide = christoffel_diagram(Lattice(a, b))
                narrow = christoffel_diagram(Lattice(a, b - 1))
                for l in range(1, a):
                    i = a - l
                    assert delta(Lattice(a, b), l) == wide.row(i) - narrow.row(i), (a, b, l)


def test_criterion_9_kreweras():
    with criterion(9, "containment poset sizes and branches"):
        g = build_poset(Lattice(4, 6))
        assert len(g) == 23
        assert len(branch(g, Diagram((2, 2, 1)))) == 9
        for lat in (Lattice(4, 6), Lattice(3, 5)):
            poset = build_poset(lat)
            for d in poset.nodes:
                assert len(branch(poset, d)) == count(d), d


def test_criterion_10_large_examples():
    with criterion(10, "large examples by value and split-count lower bounds"):
        for rows, floor in (((12, 10, 8, 7, 5, 3, 1), 18), ((7, 7, 2, 2), 8)):
            dec = Decomposer(memoize=False)
            assert dec.decompose(Diagram(rows)).value() == GOLDEN[rows]
            assert dec.splits >= floor, (rows, dec.splits)


if __name__ == "__main__":
    tests = [(name, fn) for name, fn in sorted(globals().items()) if name.startswith("test_criterion_")]
    tests.sort(key=lambda item: int(item[0].split("_")[2]))
    failed = 0
    for name, fn in tests:
        seen = len(LINES)
        try:
            fn(box_diagrams(6, 6)) if "box6" in fn.__code__.co_varnames else fn()
        except Exception:
            failed += 1
        for line in LINES[seen:]:
            print(line)
    sys.exit(1 if failed else 0)
