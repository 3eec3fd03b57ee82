import pytest
from hypothesis import given, strategies as st

from ferrers.errors import NegativeCount
from ferrers.polynomial import CatalanPolynomial as P, evaluate

monomials = st.lists(st.integers(1, 6), max_size=3).map(tuple)
polys = st.lists(st.tuples(monomials, st.integers(-3, 3)), max_size=5).map(P)


def test_merging_and_units():
    p = P([((3,), 1), ((3,), 1), ((2, 1), 2), ((1,), 1)])
    assert p.terms == {(3,): 2, (2,): 2, (): 1}
    assert P([((3,), 1), ((3,), -1)]) == P.zero()
    assert P.staircase(1) == P.one()


def test_text_form():
    p = P({(5,): 1, (4,): 1, (3, 2): 1, (3,): 2, (2,): 2, (): 1})
    assert str(p) == "C5 + C4 + C3*C2 + 2*C3 + 2*C2 + 1"
    assert str(P({(2, 2): 1, (4,): 1, (3,): 1})) == "C4 + C3 + C2^2"
    assert str(P.zero()) == "0"
    assert str(P.one()) == "1"
    assert str(P({(4,): 1, (3,): -1})) == "C4 - C3"
    assert str(P({(2,): -2})) == "-2*C2"


def test_json_round_trip():
    p = P({(3, 2): 3, (): 1})
    data = p.to_json()
    assert data == [{"coeff": 3, "monomial": [3, 2]}, {"coeff": 1, "monomial": []}]
    assert P.from_json(data) == p


def test_evaluate():
    assert evaluate(P({(4,): 1, (3,): 1, (2, 2): 1})) == 23
    assert evaluate(P({(5,): 1, (4,): 1, (3, 2): 1})) == 66
    assert evaluate(P.one()) == 1
    with pytest.raises(NegativeCount):
        evaluate(P({(3,): -1}))


@given(polys, polys, polys)
def test_ring_laws_under_evaluation(p, q, r):
    assert (p + q).value() == p.value() + q.value()
    assert (p * q).value() == p.value() * q.value()
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert hash(p + q) == hash(q + p)
