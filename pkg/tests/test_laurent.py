import pytest
from hypothesis import given, strategies as st

from dihedral_ext.laurent import BiLaurentPolynomial, LaurentPolynomial

v = LaurentPolynomial.gen("v")
q = LaurentPolynomial.gen("q")

small_polys = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=5).map(
    lambda d: LaurentPolynomial(d, "v")
)
small_bipolys = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(-5, 5), max_size=5
).map(BiLaurentPolynomial)


def test_examples():
    assert (v + v ** -1) * v == v ** 2 + 1
    p = 3 * v ** 2 - v ** -1
    assert (p + (-p)).is_zero()
    assert (q - 1) * (q - 1) == q ** 2 - 2 * q + 1


def test_no_zero_coefficients_stored():
    p = LaurentPolynomial({0: 0, 2: 3, -1: 0})
    assert p.coefficients == {2: 3}
    assert LaurentPolynomial().coefficients == {}


def test_bar_invert():
    assert (v ** 2 - v ** -1).bar_invert() == v ** -2 - v
    assert LaurentPolynomial.constant(7).bar_invert() == 7


def test_coeff():
    assert (q ** 2 - 2 * q + 1).coeff(1) == -2
    assert LaurentPolynomial().coeff(5) == 0
    e = BiLaurentPolynomial({(0, 2): 1, (1, 0): 2})
    assert e.coeff((1, 0)) == 2 and e.coeff((3, 3)) == 0


def test_big_integers():
    p = LaurentPolynomial({0: 2 ** 70})
    assert (p * p).coeff(0) == 2 ** 140


@pytest.mark.parametrize(
    "poly, text, tex",
    [
        (q ** 2 - 2 * q + 1, "q^2 - 2q + 1", "q^{2} - 2q + 1"),
        (v ** -2 - v, "-v + v^-2", "-v + v^{-2}"),
        (LaurentPolynomial(var="v"), "0", "0"),
        (-LaurentPolynomial.constant(3), "-3", "-3"),
    ],
)
def test_render(poly, text, tex):
    assert str(poly) == text
    assert poly.render(latex=True) == tex


def test_bi_render():
    e = BiLaurentPolynomial({(0, 2): 1, (1, 0): 2, (2, -2): 1})
    assert str(e) == "t^2 + 2q + q^2t^-2"
    assert e.render(latex=True) == "t^{2} + 2q + q^{2}t^{-2}"


def test_negative_power_needs_unit_monomial():
    with pytest.raises(ValueError):
        (v + 1) ** -1
    with pytest.raises(ValueError):
        (2 * v) ** -1
    assert (-v) ** -2 == v ** -2


def test_variable_mismatch():
    with pytest.raises(ValueError):
        v + q
    assert (v ** 0 + q) == q + 1


def test_evaluate_and_specialize():
    assert (q ** 2 - 2 * q + 1)(3) == 4
    e = BiLaurentPolynomial({(0, 2): 1, (1, 0): 2, (2, -2): 1})
    assert e.specialize_t(1) == q ** 2 + 2 * q + 1


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a and a + b == b + a
    assert a - a == 0


@given(small_polys, small_polys)
def test_bar_is_ring_involution(a, b):
    assert a.bar_invert().bar_invert() == a
    assert (a * b).bar_invert() == a.bar_invert() * b.bar_invert()
    assert (a + b).bar_invert() == a.bar_invert() + b.bar_invert()


@given(small_bipolys, small_bipolys, small_bipolys)
def test_bi_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a - b) + b == a
