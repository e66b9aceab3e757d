"""Finite-difference bound states of the radial oscillator and its extensions.

The Hamiltonian -d^2/dx^2 + V(x) is discretized with the three-point
Laplacian on a uniform grid with Dirichlet walls at x_min and x_max.  The
lowest eigenvalues come from Sturm-count bisection on the symmetric
tridiagonal matrix (LAPACK stebz), on grids h and h/2, combined by
Richardson extrapolation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .construct import SeedSpec, alpha_base, g_mixed, v_rational_of
from .eop import wavefunction_eval
from .errors import GridTooSmall, SingularPotential

__all__ = [
    "Grid",
    "PotentialInstance",
    "SpectralResult",
    "check_eigenfunction_match",
    "check_isospectrality",
    "conventional_potential",
    "eigenfunction_overlap",
    "eigenfunction_overlaps",
    "extended_potential",
    "predicted_energies",
    "seed_energies",
    "solve_bound_states",
    "sturm_count",
]

TAIL_TOL = 1e-6


@dataclass(frozen=True)
class Grid:
    x_min: float = 1e-4
    x_max: float = 12.0
    points: int = 4000

    def __post_init__(self):
        if not 0 < self.x_min < self.x_max:
            raise ValueError("grid needs 0 < x_min < x_max")
        if self.points < 4:
            raise ValueError("grid needs at least 4 points")

    def refined(self) -> "Grid":
        """Same interval with the spacing halved."""
        return Grid(self.x_min, self.x_max, 2 * (self.points - 1) + 1)

    @property
    def x(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.points)

    @property
    def h(self) -> float:
        return (self.x_max - self.x_min) / (self.points - 1)


@dataclass(frozen=True)
class PotentialInstance:
    spec: SeedSpec
    evaluator: Callable = field(compare=False)
    extended: bool = True

    def __call__(self, x):
        return self.evaluator(x)


def conventional_potential(spec: SeedSpec) -> PotentialInstance:
    """omega^2 x^2 / 4 + l(l+1) / x^2 with l = alpha - 1/2."""
    w = float(spec.omega)
    ll = float(spec.l * (spec.l + 1))

    def V(x):
        x = np.asarray(x, dtype=float)
        return 0.25 * w * w * x * x + ll / (x * x)

    return PotentialInstance(spec, V, extended=False)


def extended_potential(spec: SeedSpec) -> PotentialInstance:
    """Conventional part plus the rational term; refuses singular cases."""
    res = g_mixed(spec)
    if not res.nodeless:
        raise SingularPotential(f"g has a zero on the positive half-line for {spec.label()}")
    base = conventional_potential(spec).evaluator
    vrat = v_rational_of(res.g, spec.omega)
    num, den = vrat.num.float_evaluator(), vrat.den.float_evaluator()
    w = float(spec.omega)

    def V(x):
        x = np.asarray(x, dtype=float)
        z = 0.5 * w * x * x
        return base(x) + num(z) / den(z)

    return PotentialInstance(spec, V, extended=True)


@dataclass(frozen=True)
class SpectralResult:
    energies: tuple
    grid: Grid
    richardson_error: tuple
    coarse: tuple = ()
    fine: tuple = ()
    seed_energies: tuple = ()


def predicted_energies(spec: SeedSpec, count: int) -> np.ndarray:
    """omega (2 nu + alpha + 1) for nu < count."""
    return float(spec.omega) * (2.0 * np.arange(count) + float(spec.alpha) + 1.0)


def seed_energies(spec: SeedSpec) -> tuple:
    """Factorization energies of the seeds, relative to the starting potential."""
    ap, w = alpha_base(spec), spec.omega
    out = [("I", m, -w * (ap + 2 * m + 1)) for m in spec.m_I]
    out += [("II", m, -w * (ap - 2 * m - 1)) for m in spec.m_II]
    return tuple(out)


def _tridiagonal(pot: PotentialInstance, grid: Grid):
    x = grid.x[1:-1]
    h2 = grid.h ** 2
    d = 2.0 / h2 + pot(x)
    e = np.full(len(x) - 1, -1.0 / h2)
    return x, d, e


def sturm_count(d: np.ndarray, e: np.ndarray, lam) -> np.ndarray:
    """Number of eigenvalues below each shift in ``lam`` (LDL^T pivot signs)."""
    lam = np.atleast_1d(np.asarray(lam, dtype=float))
    tiny = np.finfo(float).tiny
    e2 = e * e
    piv = d[0] - lam
    count = (piv < 0).astype(int)
    for i in range(1, len(d)):
        piv = np.where(piv == 0, tiny, piv)
        piv = d[i] - lam - e2[i - 1] / piv
        count += piv < 0
    return count


def _lowest(pot: PotentialInstance, grid: Grid, count: int, vectors: bool = False):
    x, d, e = _tridiagonal(pot, grid)
    if vectors:
        w, v = eigh_tridiagonal(d, e, select="i", select_range=(0, count - 1),
                                lapack_driver="stebz")
        return x, w, v
    w = eigh_tridiagonal(d, e, eigvals_only=True, select="i",
                         select_range=(0, count - 1), lapack_driver="stebz")
    return x, w, None


def _check_tail(v: np.ndarray, grid: Grid):
    top = np.abs(v[:, -1])
    tail = top[-max(3, len(top) // 200):].max()
    if tail > TAIL_TOL * top.max():
        raise GridTooSmall(
            f"highest requested state has tail amplitude {tail / top.max():.2e} "
            f"of its maximum at x_max={grid.x_max}")


def solve_bound_states(pot: PotentialInstance, count: int, grid: Grid = Grid()) -> SpectralResult:
    if count < 1:
        raise ValueError("count must be positive")
    fine_grid = grid.refined()
    _, coarse, _ = _lowest(pot, grid, count)
    _, fine, v = _lowest(pot, fine_grid, count, vectors=True)
    _check_tail(v, fine_grid)
    extrap = (4.0 * fine - coarse) / 3.0
    err = np.abs(coarse - fine) / 3.0
    return SpectralResult(
        energies=tuple(float(x) for x in extrap),
        grid=grid,
        richardson_error=tuple(float(x) for x in err),
        coarse=tuple(float(x) for x in coarse),
        fine=tuple(float(x) for x in fine),
        seed_energies=seed_energies(pot.spec) if pot.extended else (),
    )


def check_isospectrality(spec: SeedSpec, count: int = 5, grid: Grid = Grid(),
                         tol: float = 1e-4) -> bool:
    res = solve_bound_states(extended_potential(spec), count, grid)
    diff = np.abs(np.array(res.energies) - predicted_energies(spec, count))
    return bool(np.all(diff <= tol))


def eigenfunction_overlaps(spec: SeedSpec, count: int, grid: Grid = Grid()) -> list:
    """|<u_num, u_closed>| for levels nu < count, unit-normalized on the refined grid."""
    fine = grid.refined()
    x, _, v = _lowest(extended_potential(spec), fine, count, vectors=True)
    _check_tail(v, fine)
    out = []
    for nu in range(count):
        u = v[:, nu] / np.linalg.norm(v[:, nu])
        closed = wavefunction_eval(spec, nu, x)
        closed = closed / np.linalg.norm(closed)
        out.append(float(abs(u @ closed)))
    return out


def eigenfunction_overlap(spec: SeedSpec, nu: int, grid: Grid = Grid()) -> float:
    return eigenfunction_overlaps(spec, nu + 1, grid)[nu]


def check_eigenfunction_match(spec: SeedSpec, nu: int, grid: Grid = Grid(),
                              tol: float = 1e-5) -> bool:
    return eigenfunction_overlap(spec, nu, grid) >= 1.0 - tol
