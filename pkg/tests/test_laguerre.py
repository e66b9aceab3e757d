from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, strategies as st

from xlag.laguerre import (
    LaguerreSpec, check_contiguous_relations, check_derivative_identities, laguerre, pochhammer,
)
from xlag.ratpoly import Poly

z = Poly.z()


def explicit_sum(n, a):
    """Closed-form coefficients, independent of the three-term recurrence."""
    return Poly([F((-1) ** j) * pochhammer(a + j + 1, n - j) / (factorial(n - j) * factorial(j))
                 for j in range(n + 1)])


half_integers = st.integers(-15, 15).map(lambda k: F(k, 2))


def test_examples():
    assert laguerre(LaguerreSpec(0, F(7, 3))) == Poly.one()
    assert laguerre(LaguerreSpec(1, F(3, 2))) == F(5, 2) - z
    assert laguerre(LaguerreSpec(2, F(-5, 2))) == Poly([F(3, 8), F(1, 2), F(1, 2)])


def test_negate_argument_flips_odd_coefficients():
    plain = laguerre(3, F(1, 2))
    neg = laguerre(LaguerreSpec(3, F(1, 2), negate_argument=True))
    assert neg == plain.negate_argument()
    assert neg(F(2)) == plain(F(-2))


def test_negative_degree():
    assert laguerre(-1, F(1, 2)).is_zero()
    with pytest.raises(ValueError):
        LaguerreSpec(-1, F(1, 2))


@given(st.integers(0, 9), half_integers)
def test_recurrence_matches_explicit_sum(n, a):
    assert laguerre(n, a) == explicit_sum(n, a)


@given(st.integers(0, 8), half_integers)
def test_laguerre_ode(n, a):
    y = laguerre(n, a)
    assert z * y.derivative().derivative() + (a + 1 - z) * y.derivative() + n * y == Poly.zero()


@given(st.integers(1, 8), half_integers)
def test_derivative_lowers_degree_raises_parameter(n, a):
    assert laguerre(n, a).derivative() == -laguerre(n - 1, a + 1)


def test_pochhammer():
    assert pochhammer(F(5, 2), 0) == 1
    assert pochhammer(3, 2) == 12
    assert pochhammer(-2, 3) == 0
    assert pochhammer(F(1, 2), 3) == F(1, 2) * F(3, 2) * F(5, 2)


def test_derivative_identities_examples():
    assert check_derivative_identities(1, F(3, 2))
    assert check_derivative_identities(3, F(5, 2))
    assert check_derivative_identities(2, F(-1, 2))


def test_contiguous_relations_examples():
    assert check_contiguous_relations(1, F(1, 2))
    assert check_contiguous_relations(2, F(-3, 2))
    assert check_contiguous_relations(4, F(7, 2))


@given(st.integers(1, 7), half_integers)
def test_identities_hold_broadly(m, a):
    assert check_derivative_identities(m, a)
    assert check_contiguous_relations(m, a)


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("a", [F(5, 2), F(7, 2), F(9, 2), F(11, 2), F(13, 2)])
def test_first_order_reductions_of_the_product_identities(m, a):
    # -L^(a-1)_m(-z) - d/dz L^(a-1)_m(-z) = -L^(a)_m(-z)
    p = laguerre(m, a - 1, negate_argument=True)
    assert -p - p.derivative() == -laguerre(m, a, negate_argument=True)
    # (a+1) L^(-a-1)_m(z) - z d/dz L^(-a-1)_m(z) = (a+1-m) L^(-a-2)_m(z)
    r = laguerre(m, -a - 1)
    assert (a + 1) * r - z * r.derivative() == (a + 1 - m) * laguerre(m, -a - 2)
