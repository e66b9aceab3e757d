"""Acceptance suite: one PASS/FAIL line per criterion.

Tolerances and boxes are pinned here; the sweep is k <= 4, indices <= 5
per type, alpha in {5/2, ..., 13/2}, omega = 1.
"""
import time
from fractions import Fraction as F
from math import factorial, gamma

import pytest

from xlag.construct import SeedSpec
from xlag.eop import orthogonality_integral
from xlag.laguerre import laguerre
from xlag.ratpoly import Poly
from xlag import sweep
from xlag.sweep import DEFAULT_ALPHAS, run_suite, suite_specs

KMAX, MMAX = 4, 5
DEGREE_SECONDS = 60.0
SPECTRAL_SECONDS = 120.0
ORTHO_REL = 1e-10
CLASSICAL_NORM_REL = 1e-8
ENERGY_ABS = 1e-4
OVERLAP_GAP = 1e-5
MIN_NUMERIC_SPECS = 20


def test_tolerances_are_pinned():
    assert sweep.ORTHO_TOL == ORTHO_REL
    assert sweep.ENERGY_TOL == ENERGY_ABS
    assert sweep.OVERLAP_TOL == OVERLAP_GAP
    assert sweep.Grid() == sweep.Grid(1e-4, 12.0, 4000)


@pytest.fixture
def report(capsys):
    def emit(label, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        if not ok:
            pytest.fail(f"{label}: {detail}", pytrace=False)
    return emit


def _summary(rep, seconds):
    head = f"{rep.checked} configurations, {len(rep.failures)} failures, {seconds:.1f}s"
    return head + (f"; first: {rep.failures[0]}" if rep.failures else "")


def _timed(name, **kw):
    t0 = time.perf_counter()
    rep = run_suite(name, KMAX, MMAX, **kw)
    return rep, time.perf_counter() - t0


def test_c1_degree_and_leading_coefficient_law(report):
    rep, dt = _timed("degree")
    ok = rep.ok and rep.checked >= 1900 and dt < DEGREE_SECONDS
    report("C1 degree/leading law", ok, _summary(rep, dt) + f" (limit {DEGREE_SECONDS:.0f}s)")


def test_c2_matrix_route_equivalence(report):
    rep, dt = _timed("matrix")
    report("C2 matrix routes", rep.ok and rep.checked >= 1900, _summary(rep, dt))


def test_c3_eop_ode_and_normalization(report):
    rep, dt = _timed("eop")
    box = all(s.k <= 3 for s in suite_specs("eop", KMAX, MMAX))
    report("C3 EOP ODE and normalization (k<=3, nu<=3)", rep.ok and box, _summary(rep, dt))


def _first_order_reductions():
    z = Poly.z()
    bad = []
    for a in DEFAULT_ALPHAS:
        for m in range(1, MMAX + 1):
            p = laguerre(m, a - 1, negate_argument=True)
            if -p - p.derivative() != -laguerre(m, a, negate_argument=True):
                bad.append(("I", a, m))
            r = laguerre(m, -a - 1)
            if (a + 1) * r - z * r.derivative() != (a + 1 - m) * laguerre(m, -a - 2):
                bad.append(("II", a, m))
    return bad


def test_c4_shape_invariance_triple(report):
    ident, dt1 = _timed("identities")
    shape, dt2 = _timed("shape")
    bad = _first_order_reductions()
    ok = ident.ok and shape.ok and not bad
    detail = (f"identities+proportionality [{_summary(ident, dt1)}]; "
              f"shape invariance [{_summary(shape, dt2)}]; "
              f"k=1 reductions {2 * len(DEFAULT_ALPHAS) * MMAX - len(bad)}/"
              f"{2 * len(DEFAULT_ALPHAS) * MMAX}")
    report("C4 shape-invariance triple", ok, detail)


def test_c5_orthogonality(report):
    rep, dt = _timed("orthogonality")
    worst = 0.0
    for a in DEFAULT_ALPHAS:
        for n in range(5):
            exact = gamma(float(a) + n + 1) / factorial(n)
            worst = max(worst, abs(orthogonality_integral(SeedSpec(a), n, n) - exact) / exact)
    ok = rep.ok and rep.checked >= MIN_NUMERIC_SPECS and worst <= CLASSICAL_NORM_REL
    report("C5 orthogonality", ok,
           _summary(rep, dt) + f"; off-diagonal tol {ORTHO_REL:g}; "
           f"worst classical norm rel err {worst:.1e}")


def test_c6_isospectrality(report):
    rep, dt = _timed("spectral")
    ok = rep.ok and rep.checked >= MIN_NUMERIC_SPECS and dt < SPECTRAL_SECONDS
    report("C6 isospectrality", ok,
           _summary(rep, dt) + f"; |dE| <= {ENERGY_ABS:g}, overlap >= 1-{OVERLAP_GAP:g}, "
           f"limit {SPECTRAL_SECONDS:.0f}s")


def test_c7_negative_control(report):
    # asserted as stated: zero naive determinant for every 0 < q < k
    rep, dt = _timed("negative")
    mixed = sum(1 for s in suite_specs("negative", KMAX, MMAX) if 0 < s.q < s.k)
    report("C7 negative control", rep.ok, f"{mixed} mixed configurations; " + _summary(rep, dt))
