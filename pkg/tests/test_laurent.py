from hypothesis import given
from hypothesis import strategies as st

from surgerykit.laurent import LOOP_FACTOR, LaurentPoly

polys = st.dictionaries(
    st.integers(min_value=-6, max_value=6), st.integers(min_value=-9, max_value=9), max_size=5
).map(LaurentPoly)


def test_basic_arithmetic():
    a = LaurentPoly({2: 1})
    b = LaurentPoly({-2: 1})
    assert a * b == LaurentPoly.one()
    assert a + (-a) == LaurentPoly.zero()
    assert (a + b) ** 2 == a * a + LaurentPoly({0: 2}) + b * b


def test_loop_factor_value():
    assert LOOP_FACTOR == LaurentPoly({2: -1, -2: -1})
    assert LOOP_FACTOR ** 0 == LaurentPoly.one()


def test_no_zero_coefficients_stored():
    p = LaurentPoly({3: 5}) - LaurentPoly({3: 5})
    assert p.items() == []
    assert p.is_zero()


def test_str_forms():
    assert str(LaurentPoly.zero()) == "0"
    assert str(LaurentPoly({4: -1, -4: -1})) == "-A^4 - A^-4"
    assert str(LaurentPoly({1: 2, 0: -3})) == "2*A - 3"


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@given(polys, st.integers(min_value=-5, max_value=5))
def test_shift_is_monomial_multiplication(p, k):
    assert p.shifted(k) == p * LaurentPoly.monomial(1, k)
