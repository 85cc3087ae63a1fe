from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mapcensus.series import Series1, Series2, SeriesError, exact

small = st.integers(min_value=-6, max_value=6)
rational = st.builds(Fraction, small, st.integers(min_value=1, max_value=4))


@st.composite
def series1(draw, order=6, constant=None):
    cs = draw(st.lists(rational, min_size=order + 1, max_size=order + 1))
    if constant is not None:
        cs[0] = constant
    return Series1(cs, order)


@st.composite
def series2(draw, order=4, constant=None):
    coeffs = {}
    for i in range(order + 1):
        for j in range(order + 1 - i):
            coeffs[(i, j)] = draw(rational)
    if constant is not None:
        coeffs[(0, 0)] = constant
    return Series2(coeffs, order)


def test_exact_normalizes_integral_fractions():
    assert type(exact(Fraction(6, 3))) is int
    assert exact(Fraction(1, 2)) == Fraction(1, 2)
    assert type(exact(True)) is int


def test_geometric_series():
    x = Series1.x(8)
    assert (1 / (1 - x)).coeffs == (1,) * 9
    assert (1 / (1 - x) ** 2).coeffs == tuple(range(1, 10))


def test_catalan_fixed_point():
    # c = 1 + x c^2
    c = Series1.const(1, 0)
    for k in range(1, 9):
        c = (1 + Series1.x(k) * c.padded(k) ** 2).truncate(k)
    assert list(c.coeffs) == [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_division_by_x_power_keeps_precision_honest():
    s = Series1([0, 0, 1, 1, 0, 0], 5).div_x(2)
    assert s.order == 3
    assert s.coeffs == (1, 1, 0, 0)
    with pytest.raises(SeriesError):
        Series1([1, 1], 1).div_x(1)
    # x is known to order 5, so x^2 is known to order 6
    assert (Series1.x(5) ** 2).order == 6


def test_division_with_valuation():
    x = Series1.x(6)
    q = (x ** 2 + x ** 3) / (x - x ** 2)
    assert q[0] == 0 and q[1] == 1 and q[2] == 2
    with pytest.raises(SeriesError):
        (1 + x) / x
    with pytest.raises(ZeroDivisionError):
        x / Series1.zero(6)


def test_compose_requires_zero_constant_term():
    x = Series1.x(4)
    with pytest.raises(SeriesError):
        x.compose(1 + x)


def test_laurent_shift_round_trip():
    x = Series1.x(5)
    s = (x ** 2 + 3 * x ** 4).laurent_shift(-2).normalized()
    assert s.coeffs[:3] == (1, 0, 3)
    with pytest.raises(SeriesError):
        (1 + x).laurent_shift(-1).normalized()


def test_series2_basic_products():
    n = 4
    xb, xw = Series2.xb(n), Series2.xw(n)
    s = 1 / (1 - xb - xw)
    # coefficient of xb^i xw^j is binomial(i + j, i)
    assert s[2, 2] == 6 and s[1, 3] == 4 and s[0, 4] == 1
    assert s.diagonal().coeffs == (1, 2, 4, 8, 16)
    assert s.swap()[3, 1] == s[1, 3]


def test_series2_monomial_division():
    s = Series2({(1, 1): 1, (2, 1): 1}, 5).div_monomial(1, 1)
    assert s[0, 0] == 1 and s[1, 0] == 1 and s.order == 3
    with pytest.raises(SeriesError):
        Series2({(1, 0): 1, (0, 1): 1}, 3).div_monomial(1, 0)


def test_series2_index_beyond_order():
    s = Series2.xb(3)
    with pytest.raises(IndexError):
        s[2, 2]


def test_power_substitute():
    x = Series1.x(4)
    s = (1 / (1 - x)).power_substitute(3)
    assert s.order == 14
    assert [s[k] for k in range(7)] == [1, 0, 0, 1, 0, 0, 1]


# properties ---------------------------------------------------------------


@given(series1(), series1(), series1())
def test_ring_laws_1v(a, b, c):
    assert (a * (b + c) - (a * b + a * c)).is_zero()
    assert ((a * b) * c - a * (b * c)).is_zero()
    assert (a * b - b * a).is_zero()


@given(series1(), series1(constant=Fraction(1)))
def test_division_inverts_multiplication(a, u):
    assert ((a * u) / u - a).is_zero()


@given(series1(), st.integers(min_value=0, max_value=4))
def test_div_x_inverts_mul_x(a, k):
    assert a.mul_x(k).div_x(k).coeffs == a.coeffs


@given(series1())
def test_derivative_of_antiderivative(a):
    assert (a.antiderivative().derivative() - a).is_zero()


@given(series1(), series1())
def test_euler_is_a_derivation(a, b):
    assert ((a * b).euler() - (a.euler() * b + a * b.euler())).is_zero()


@given(series1(order=5), series1(order=5, constant=0), series1(order=5, constant=0))
@settings(max_examples=40)
def test_composition_is_associative(f, g, h):
    assert (f.compose(g.compose(h)) - f.compose(g).compose(h)).is_zero()


@given(series2(), series2(), series2())
@settings(max_examples=40)
def test_ring_laws_2v(a, b, c):
    assert (a * (b + c) - (a * b + a * c)).is_zero()
    assert ((a * b) * c - a * (b * c)).is_zero()


@given(series2(), series2(constant=Fraction(2)))
@settings(max_examples=40)
def test_division_inverts_multiplication_2v(a, u):
    assert ((a * u) / u - a).is_zero()


@given(series2(), series2())
@settings(max_examples=40)
def test_swap_and_diagonal(a, b):
    assert (a.swap().swap() - a).is_zero()
    assert ((a * b).swap() - a.swap() * b.swap()).is_zero()
    assert ((a * b).diagonal() - a.diagonal() * b.diagonal()).is_zero()
    assert (a.swap().diagonal() - a.diagonal()).is_zero()


@given(series2(), series2(), rational)
@settings(max_examples=40)
def test_euler_linear_and_derivation_2v(a, b, c):
    assert ((a + b.scale(c)).euler() - (a.euler() + b.euler().scale(c))).is_zero()
    assert ((a * b).euler() - (a.euler() * b + a * b.euler())).is_zero()


@given(series2(order=4), st.integers(0, 2), st.integers(0, 2))
@settings(max_examples=40)
def test_monomial_round_trip(a, p, q):
    back = a.mul_monomial(p, q).div_monomial(p, q)
    assert (back - a).is_zero()
    assert back.order == a.order


@given(series2(order=4), series2(order=4, constant=0), series2(order=4, constant=0))
@settings(max_examples=30)
def test_compose_with_variables_is_identity_and_diagonal_commutes(f, g1, g2):
    n = f.order
    assert (f.compose(Series2.xb(n), Series2.xw(n)) - f).is_zero()
    # swapping the result is the same as swapping f and both arguments
    assert (f.compose(g1, g2).swap() - f.swap().compose(g2.swap(), g1.swap())).is_zero()
