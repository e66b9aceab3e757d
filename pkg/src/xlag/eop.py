"""Exceptional Laguerre polynomials built by first-order recursion.

Starting from a classical Laguerre polynomial, type-I seeds are added first
(parameter rising by one per step), then type-II seeds (parameter falling by
one per step).  Each step applies a first-order operator, divides exactly by
the previous denominator polynomial and normalizes by a step constant.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

import numpy as np

from .construct import SeedSpec, alpha_base, denominator, g_mixed
from .errors import DegenerateStep, SingularPotential
from .laguerre import laguerre
from .ratpoly import Poly, as_rational

__all__ = [
    "EOPResult",
    "QuadratureConfig",
    "StepOperator",
    "check_eop_ode",
    "eop_construct",
    "expected_leading",
    "gram_matrix",
    "orthogonality_integral",
    "step_constant",
    "step_operator_I",
    "step_operator_II",
    "wavefunction_eval",
    "weight_density",
]


@dataclass(frozen=True)
class EOPResult:
    y: Poly
    n: int
    nu: int
    mu: int
    spec: SeedSpec
    g: Poly


@dataclass(frozen=True)
class StepOperator:
    """One recursion step p -> [g_cur-operator applied to p] / g_prev, scaled by 1/D."""

    kind: str
    g_prev: Poly
    g_cur: Poly
    alpha_cur: Fraction
    D: Fraction

    def __post_init__(self):
        if self.kind not in ("typeI", "typeII"):
            raise ValueError(f"unknown step kind {self.kind!r}")
        if not self.D:
            raise DegenerateStep("step constant D vanishes")
        if not self.g_prev or not self.g_cur:
            raise ValueError("step operator needs nonzero polynomials")

    def __call__(self, p: Poly) -> Poly:
        if self.kind == "typeI":
            out = step_operator_I(self.g_prev, self.g_cur)(p)
        else:
            out = step_operator_II(self.g_prev, self.g_cur, self.alpha_cur)(p)
        return out / self.D


def step_operator_I(g_prev: Poly, g_cur: Poly):
    """p -> [g_cur (p' - p) - g_cur' p] / g_prev."""
    dg = g_cur.derivative()

    def apply(p: Poly) -> Poly:
        return (g_cur * (p.derivative() - p) - dg * p).divexact(g_prev)

    return apply


def step_operator_II(g_prev: Poly, g_cur: Poly, alpha):
    """p -> [g_cur (z p' + (alpha+1) p) - z g_cur' p] / g_prev."""
    a1 = as_rational(alpha) + 1
    zdg = g_cur.derivative().shift_degree(1)

    def apply(p: Poly) -> Poly:
        return (g_cur * (p.derivative().shift_degree(1) + a1 * p) - zdg * p).divexact(g_prev)

    return apply


def step_constant(kind: str, spec_cur: SeedSpec, nu: int) -> Fraction:
    """Normalization constant of the step that adds the last seed of ``spec_cur``.

    For a type-I step ``spec_cur`` is a pure type-I configuration; for a
    type-II step its last type-II index is the one being added.
    """
    k, q = spec_cur.k, spec_cur.q
    if kind == "typeI":
        if spec_cur.m_II or not spec_cur.m_I:
            raise ValueError("type-I step constant needs a pure type-I configuration")
        ms = spec_cur.m_I
        mk = ms[-1]
        D = Fraction((-1) ** ((mk - k) % 2) * prod(mk - m for m in ms[:-1]))
    elif kind == "typeII":
        if not spec_cur.m_II:
            raise ValueError("type-II step constant needs a type-II seed")
        ms = spec_cur.m_II
        mk = ms[-1]
        factor = spec_cur.alpha + nu + k - 2 * q - mk
        D = (-1) ** (k - q - 1) * factor * prod(mk - m for m in ms[:-1])
    else:
        raise ValueError(f"unknown step kind {kind!r}")
    if not D:
        raise DegenerateStep(f"step constant vanishes for {spec_cur.label()} at nu={nu}")
    return Fraction(D)


def _chain(spec: SeedSpec):
    """Configurations visited by the recursion, as (kind, spec_prev, spec_cur)."""
    base = alpha_base(spec)
    steps = []
    prev = SeedSpec(base, omega=spec.omega)
    for j in range(1, spec.q + 1):
        cur = SeedSpec(base + j, spec.m_I[:j], omega=spec.omega)
        steps.append(("typeI", prev, cur))
        prev = cur
    top = base + spec.q
    for t in range(1, spec.k - spec.q + 1):
        cur = SeedSpec(top - t, spec.m_I, spec.m_II[:t], omega=spec.omega)
        steps.append(("typeII", prev, cur))
        prev = cur
    return steps


def step_operators(spec: SeedSpec, nu: int) -> list:
    return [StepOperator(kind, denominator(prev), denominator(cur), cur.alpha,
                         step_constant(kind, cur, nu))
            for kind, prev, cur in _chain(spec)]


def eop_construct(spec: SeedSpec, nu: int) -> EOPResult:
    if nu < 0:
        raise ValueError("level nu must be non-negative")
    y = laguerre(nu, alpha_base(spec))
    for op in step_operators(spec, nu):
        y = op(y)
    g = denominator(spec)
    return EOPResult(y=y, n=y.degree, nu=nu, mu=g.degree, spec=spec, g=g)


def expected_leading(spec: SeedSpec, n: int, mu: int) -> Fraction:
    """(-1)^n / [(n - mu)! m_1! ... m_k!]."""
    den = factorial(n - mu) * prod(factorial(m) for m in spec.indices)
    return Fraction((-1) ** n, den)


def check_eop_ode(result: EOPResult) -> bool:
    """Exact check of the EOP differential equation multiplied through by g^2."""
    y, g, a = result.y, result.g, result.spec.alpha
    z = Poly.z()
    y1, y2 = y.derivative(), y.derivative().derivative()
    g1, g2 = g.derivative(), g.derivative().derivative()
    gg = g * g
    lhs = (gg * (z * y2 + (a + 1 - z) * y1)
           - 2 * z * g * g1 * y1
           + ((z - a) * g * g1 + z * g * g2) * y)
    return lhs == (result.mu - result.n) * gg * y


# --- numerics ------------------------------------------------------------

def _require_nodeless(spec: SeedSpec) -> Poly:
    res = g_mixed(spec)
    if not res.nodeless:
        raise SingularPotential(f"g has a zero on the positive half-line for {spec.label()}")
    return res.g


def weight_density(spec: SeedSpec, z_point: float) -> float:
    """z^alpha e^-z / g(z)^2 in floating point."""
    g = _require_nodeless(spec)
    z = float(z_point)
    if z <= 0:
        raise ValueError("weight is defined for z > 0")
    return z ** float(spec.alpha) * np.exp(-z) / g.float_evaluator()(z) ** 2


@dataclass(frozen=True)
class QuadratureConfig:
    """Composite Gauss-Legendre settings for integrals over (0, oo)."""

    order: int = 32
    initial_panels: int = 8
    rtol: float = 1e-12
    tail_rtol: float = 1e-14
    max_panels: int = 4096


def _integrate_panels(f, t_max: float, panels: int, order: int) -> float:
    x, w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(0.0, t_max, panels + 1)
    a, b = edges[:-1, None], edges[1:, None]
    nodes = 0.5 * (b - a) * x + 0.5 * (a + b)
    return float(np.sum(0.5 * (b - a) * w * f(nodes)))


def _poly_product_integral(polys, spec: SeedSpec, g: Poly, quad: QuadratureConfig,
                           scale: float = None) -> float:
    # t = sqrt(z): z^alpha dz = 2 t^(2 alpha + 1) dt, smooth at 0 for half-integer alpha
    evals = [p.float_evaluator() for p in polys]
    geval = g.float_evaluator()
    two_a1 = 2.0 * float(spec.alpha) + 1.0

    def f(t):
        z = t * t
        out = 2.0 * t ** two_a1 * np.exp(-z) / geval(z) ** 2
        for e in evals:
            out = out * e(z)
        return out

    def magnitude(t):
        return abs(f(np.array([t]))[0])

    # reference size for the tail cut: the integrand with |p| replaced by p^2
    def f_abs(t):
        z = t * t
        out = 2.0 * t ** two_a1 * np.exp(-z) / geval(z) ** 2
        for e in evals:
            out = out * np.abs(e(z))
        return out

    ref = scale if scale is not None else _integrate_panels(f_abs, 40.0, 64, quad.order)
    t_max = 4.0
    # integrand decays like exp(-t^2); the tail beyond t_max is bounded by
    # |f(t_max)| / (2 t_max - degree/t_max), so push until that is negligible
    deg = sum(p.degree for p in polys if p) + two_a1 + 2
    while True:
        decay = 2 * t_max - deg / t_max
        if decay > 1 and magnitude(t_max) / decay < quad.tail_rtol * ref:
            break
        t_max += 1.0
    panels = quad.initial_panels
    prev = _integrate_panels(f, t_max, panels, quad.order)
    while panels < quad.max_panels:
        panels *= 2
        cur = _integrate_panels(f, t_max, panels, quad.order)
        if abs(cur - prev) <= quad.rtol * max(abs(cur), ref):
            return cur
        prev = cur
    return prev


def orthogonality_integral(spec: SeedSpec, nu1: int, nu2: int,
                           quad: QuadratureConfig = QuadratureConfig()) -> float:
    """Integral of y_{mu+nu1} y_{mu+nu2} z^alpha e^-z / g^2 over (0, oo)."""
    g = _require_nodeless(spec)
    y1 = eop_construct(spec, nu1).y
    y2 = eop_construct(spec, nu2).y
    return _poly_product_integral([y1, y2], spec, g, quad)


def gram_matrix(spec: SeedSpec, levels: int,
                quad: QuadratureConfig = QuadratureConfig()) -> np.ndarray:
    g = _require_nodeless(spec)
    ys = [eop_construct(spec, nu).y for nu in range(levels)]
    out = np.empty((levels, levels))
    for i in range(levels):
        out[i, i] = _poly_product_integral([ys[i], ys[i]], spec, g, quad)
    for i in range(levels):
        for j in range(i + 1, levels):
            ref = np.sqrt(out[i, i] * out[j, j])
            out[i, j] = out[j, i] = _poly_product_integral([ys[i], ys[j]], spec, g, quad, ref)
    return out


def wavefunction_eval(spec: SeedSpec, nu: int, x_point):
    """Unnormalized bound state eta(z) y_n(z) / g(z), z = omega x^2 / 2.

    ``x_point`` may be a float or a numpy array.
    """
    g = _require_nodeless(spec)
    y = eop_construct(spec, nu).y
    x = np.asarray(x_point, dtype=float)
    z = 0.5 * float(spec.omega) * x * x
    a = float(spec.alpha)
    eta = z ** (0.25 * (2 * a + 1)) * np.exp(-0.5 * z)
    out = eta * y.float_evaluator()(z) / g.float_evaluator()(z)
    return float(out) if out.ndim == 0 else out
