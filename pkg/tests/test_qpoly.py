import json

import pytest
from hypothesis import given, settings, strategies as st

from hlgal.qpoly import QPoly, leading_data

coeff_lists = st.lists(st.integers(-9, 9), max_size=6)


def test_normalization():
    assert QPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert QPoly((0, 0)).is_zero()
    assert QPoly.q_power(3).coeffs == (0, 0, 0, 1)


def test_term():
    assert QPoly.term(1, 1) == QPoly((0, -1, 1))  # q(q-1)
    assert QPoly.term(0, 2) == QPoly((1, -2, 1))  # (q-1)^2
    assert QPoly.term(2, 0) == QPoly.q_power(2)


def test_pretty():
    assert QPoly((0, 0, 0, -2, 2)).pretty() == "2q^4 - 2q^3"
    assert QPoly((1,)).pretty() == "1"
    assert QPoly(()).pretty() == "0"
    assert QPoly((0, 1)).pretty() == "q"
    assert QPoly((-1, 1)).pretty() == "q - 1"


def test_evaluate():
    p = QPoly((1, -2, 1))
    assert p(1) == 0
    assert p(3) == 4


def test_leading_data():
    assert leading_data(QPoly((0, 0, 0, -2, 2))) == (4, 2)
    with pytest.raises(ValueError):
        leading_data(QPoly.zero())


def test_divide_exact():
    num = QPoly((0, -1, 1)) * QPoly((2, 3)) + QPoly.zero()
    assert num.divide_exact(QPoly((2, 3))) == QPoly((0, -1, 1))
    with pytest.raises(ArithmeticError):
        QPoly((1, 1)).divide_exact(QPoly((0, 1)))


def test_shift():
    assert QPoly((1, 2)).shift(2) == QPoly((0, 0, 1, 2))
    assert QPoly((0, 0, 5)).shift(-2) == QPoly((5,))
    with pytest.raises(ValueError):
        QPoly((1, 1)).shift(-1)


def test_json_roundtrip():
    p = QPoly((0, 0, 0, -2, 2))
    assert QPoly.from_jsonable(json.loads(p.to_json())) == p


def test_immutable():
    p = QPoly((1,))
    with pytest.raises(AttributeError):
        p.coeffs = (2,)


@settings(max_examples=200, deadline=None)
@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    p, q, r = QPoly(a), QPoly(b), QPoly(c)
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert p * (q * r) == (p * q) * r
    assert p - p == QPoly.zero()


@settings(max_examples=100, deadline=None)
@given(coeff_lists, coeff_lists)
def test_multiplication_then_exact_division(a, b):
    p, q = QPoly(a), QPoly(b)
    if q.is_zero():
        return
    assert (p * q).divide_exact(q) == p
