"""Exact counting of Dyck paths inside Ferrers diagrams."""

__version__ = "0.1.0"

from .christoffel import (
    christoffel_diagram,
    christoffel_word,
    comparison_difference,
    delta,
    excess_cells,
    q_cells,
)
from .core import (
    EMPTY,
    CellRef,
    Diagram,
    Lattice,
    diagram_to_word,
    is_dyck,
    is_staircase,
    min_enclosing_staircase,
    parse_diagram,
    staircase_of,
    word_to_diagram,
)
from .decomposition import (
    Decomposer,
    SplitResult,
    canonical_corner,
    corners,
    count,
    count_through_cell,
    decompose,
    decompose_alternative,
    split_at,
)
from .formulas import (
    avoid_line_count,
    ballot_general,
    bizley_count,
    catalan,
    dyck_count_prime,
    fuss_catalan,
    general_catalan,
    z_of,
)
from .kreweras import PosetGraph, branch, build_poset, to_dot, to_json
from .oracle import EnumerationBudget, count_contained, enumerate_contained, enumerate_dyck_words
from .polynomial import CatalanPolynomial, evaluate
