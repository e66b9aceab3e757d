from fractions import Fraction as F
from math import gamma, factorial

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from xlag.construct import SeedSpec, g_mixed
from xlag.eop import (
    StepOperator, check_eop_ode, eop_construct, expected_leading, gram_matrix,
    orthogonality_integral, step_constant, step_operator_I, step_operator_II, step_operators,
    wavefunction_eval, weight_density,
)
from xlag.errors import DegenerateStep, SingularPotential
from xlag.laguerre import laguerre
from xlag.ratpoly import Poly

z = Poly.z()


def test_step_operator_examples():
    one = Poly.one()
    assert step_operator_I(one, z + F(5, 2))(one) == -(z + F(7, 2))
    L = laguerre(3, F(1, 2))
    assert step_operator_I(one, one)(L) == L.derivative() - L
    a = F(7, 2)
    assert step_operator_II(one, -a - z, a)(one) == Poly([F(-63, 4), F(-7, 2)])
    assert step_operator_II(one, one, a)(one) == Poly.constant(a + 1)
    assert step_operator_II(one, z, a)(one) == a * z


def test_step_operator_requires_exact_division():
    from xlag.errors import NonExactDivision
    with pytest.raises(NonExactDivision):
        step_operator_I(z + 1, z + 2)(Poly.one())


def test_step_constant_examples():
    assert step_constant("typeI", SeedSpec(F(7, 2), (1,)), 0) == 1
    assert step_constant("typeII", SeedSpec(F(7, 2), (), (1,)), 0) == F(7, 2)
    assert step_constant("typeI", SeedSpec(F(7, 2), (1, 2)), 0) == 1
    assert step_constant("typeI", SeedSpec(F(7, 2), (1, 3)), 0) == -2
    with pytest.raises(ValueError):
        step_constant("typeI", SeedSpec(F(7, 2), (1,), (2,)), 0)


def test_vanishing_step_constant():
    # alpha + nu + k - 2q - m = 0
    with pytest.raises(DegenerateStep):
        step_constant("typeII", SeedSpec(F(1), (), (2,)), 0)
    with pytest.raises(DegenerateStep):
        StepOperator("typeI", Poly.one(), Poly.one(), F(1), F(0))


def test_recursion_order_and_parameters():
    ops = step_operators(SeedSpec(F(9, 2), (1, 2), (3,)), 0)
    assert [o.kind for o in ops] == ["typeI", "typeI", "typeII"]
    # base 7/2, up by one per type-I step, down by one per type-II step
    assert [o.alpha_cur for o in ops] == [F(9, 2), F(11, 2), F(9, 2)]


def test_construct_examples():
    r = eop_construct(SeedSpec(F(3, 2)), 2)
    assert r.y == laguerre(2, F(3, 2)) and (r.n, r.mu) == (2, 0)
    assert eop_construct(SeedSpec(F(5, 2), (1,)), 0).y == -(z + F(7, 2))
    assert eop_construct(SeedSpec(F(7, 2), (), (1,)), 0).y == -(z + F(9, 2))


def test_ode_examples():
    for nu in range(3):
        assert check_eop_ode(eop_construct(SeedSpec(F(5, 2), (1,)), nu))
    for nu in range(2):
        assert check_eop_ode(eop_construct(SeedSpec(F(5, 2), (1,), (1,)), nu))
    assert check_eop_ode(eop_construct(SeedSpec(F(5, 2)), 4))


def test_ode_detects_a_wrong_polynomial():
    r = eop_construct(SeedSpec(F(5, 2), (1,)), 2)
    bad = type(r)(y=r.y + 1, n=r.n, nu=r.nu, mu=r.mu, spec=r.spec, g=r.g)
    assert not check_eop_ode(bad)


seeds = st.tuples(
    st.sets(st.integers(1, 4), max_size=2).map(lambda s: tuple(sorted(s))),
    st.sets(st.integers(1, 4), max_size=2).map(lambda s: tuple(sorted(s))),
    st.integers(2, 10).map(lambda n: F(2 * n + 1, 2)),
    st.integers(0, 3),
)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_ode_and_normalization(t):
    m_I, m_II, a, nu = t
    spec = SeedSpec(a, m_I, m_II)
    r = eop_construct(spec, nu)
    assert r.n == r.mu + nu
    assert r.y.leading == expected_leading(spec, r.n, r.mu)
    assert check_eop_ode(r)


def test_weight_density():
    assert weight_density(SeedSpec(F(0)), 1e-300) == pytest.approx(1.0)
    assert weight_density(SeedSpec(F(5, 2), (1,)), 200.0) < 1e-70
    with pytest.raises(SingularPotential):
        weight_density(SeedSpec(F(5, 2), (), (4,)), 1.0)


@pytest.mark.parametrize("a", [F(1, 2), F(5, 2), F(9, 2)])
@pytest.mark.parametrize("n", range(5))
def test_classical_norms(a, n):
    val = orthogonality_integral(SeedSpec(a), n, n)
    exact = gamma(float(a) + n + 1) / factorial(n)
    assert abs(val - exact) <= 1e-8 * exact


def test_norm_example():
    assert orthogonality_integral(SeedSpec(F(5, 2)), 1, 1) == pytest.approx(11.6317, rel=1e-5)


def test_quadrature_against_adaptive_oracle():
    spec = SeedSpec(F(5, 2), (1,), (2,))
    g = g_mixed(spec).g.float_evaluator()
    ys = [eop_construct(spec, nu).y.float_evaluator() for nu in (0, 2)]
    f = lambda t: t ** 2.5 * np.exp(-t) / g(t) ** 2 * ys[0](t) * ys[1](t)
    oracle, _ = quad(f, 0, np.inf, epsabs=1e-13, epsrel=1e-11, limit=400)
    diag = orthogonality_integral(spec, 0, 0)
    assert abs(orthogonality_integral(spec, 0, 2) - oracle) <= 1e-9 * diag
    f2 = lambda t: t ** 2.5 * np.exp(-t) / g(t) ** 2 * ys[0](t) ** 2
    assert diag == pytest.approx(quad(f2, 0, np.inf, epsrel=1e-12, limit=400)[0], rel=1e-9)


def test_gram_matrix_is_diagonal():
    G = gram_matrix(SeedSpec(F(5, 2), (1,)), 5)
    d = np.sqrt(np.diag(G))
    off = np.abs(G / np.outer(d, d) - np.eye(5))
    assert off.max() <= 1e-10
    assert np.all(np.diag(G) > 0)


def test_wavefunction_limits():
    spec = SeedSpec(F(5, 2), (1,), (2,))
    assert abs(wavefunction_eval(spec, 1, 1e-6)) < 1e-8
    assert abs(wavefunction_eval(spec, 1, 30.0)) < 1e-50
    xs = np.linspace(0.1, 5, 7)
    arr = wavefunction_eval(spec, 2, xs)
    assert arr.shape == xs.shape
    assert arr[3] == pytest.approx(wavefunction_eval(spec, 2, float(xs[3])))
