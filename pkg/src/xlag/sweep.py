"""Enumerate seed configurations and run the verification suites over them."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .construct import (
    SeedSpec, g_mixed, g_pure, gamma_matrix, gamma_tilde_matrix, gamma_tilde_via_binomial,
    leading_term_gamma, leading_term_gamma_tilde, predict_degree, predict_leading,
)
from .eop import check_eop_ode, eop_construct, expected_leading, gram_matrix
from .errors import XlagError
from .shapeinv import (
    check_identity_I, check_identity_II, check_lowest_eop_propto_g, check_shape_invariance,
)
from .spectral import Grid, eigenfunction_overlaps, extended_potential, predicted_energies, solve_bound_states

DEFAULT_ALPHAS = tuple(Fraction(n, 2) for n in (5, 7, 9, 11, 13))

SUITES = ("degree", "matrix", "eop", "identities", "shape", "orthogonality",
          "spectral", "negative")


def iter_specs(kmax: int = 4, mmax: int = 5, alphas=DEFAULT_ALPHAS, omega=1, kmin: int = 0):
    """All configurations with kmin <= k <= kmax and indices <= mmax, in a fixed order."""
    for k in range(kmin, kmax + 1):
        for q in range(k, -1, -1):
            for m_I in combinations(range(1, mmax + 1), q):
                for m_II in combinations(range(1, mmax + 1), k - q):
                    for a in alphas:
                        yield SeedSpec(Fraction(a), m_I, m_II, Fraction(omega))


def is_nodeless(spec: SeedSpec) -> bool:
    return g_mixed(spec).nodeless


def worker_count() -> int:
    env = os.environ.get("XLAG_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ValueError(f"XLAG_THREADS must be a positive integer, got {env!r}") from None
        if n < 1:
            raise ValueError(f"XLAG_THREADS must be a positive integer, got {env!r}")
        return n
    return os.cpu_count() or 1


def pmap(fn, items, workers: int = None) -> list:
    """Ordered map over a bounded process pool (serial when one worker)."""
    items = list(items)
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (8 * workers))))


# --- per-spec checks; each returns a list of failure messages -------------

def check_degree(spec: SeedSpec) -> list:
    res = g_mixed(spec)
    out = []
    if res.mu != predict_degree(spec):
        out.append(f"degree-law FAILED at {spec.label()}: mu={res.mu}, predicted {predict_degree(spec)}")
    if res.leading != predict_leading(spec):
        out.append(f"leading-coefficient FAILED at {spec.label()}: "
                   f"{res.leading}, predicted {predict_leading(spec)}")
    return out


def check_matrix(spec: SeedSpec) -> list:
    if spec.k == 0:
        return []
    out = []
    gam = gamma_matrix(spec)
    tilde = gamma_tilde_matrix(spec)
    if tilde.det() != gam.det():
        out.append(f"gamma-tilde determinant FAILED at {spec.label()}")
    if gamma_tilde_via_binomial(spec) != tilde:
        out.append(f"gamma-tilde binomial rows FAILED at {spec.label()}")
    if (spec.q in (0, spec.k)) and g_pure(spec).g != g_mixed(spec).g:
        out.append(f"pure-case Wronskian route FAILED at {spec.label()}")
    return out


def check_eop(spec: SeedSpec, nus=range(4)) -> list:
    out = []
    for nu in nus:
        r = eop_construct(spec, nu)
        if r.n != r.mu + nu or r.y.leading != expected_leading(spec, r.n, r.mu):
            out.append(f"EOP normalization FAILED at {spec.label()} nu={nu}")
        if not check_eop_ode(r):
            out.append(f"EOP differential equation FAILED at {spec.label()} nu={nu}")
    return out


def check_identities(spec: SeedSpec) -> list:
    out = []
    if spec.k == 0:
        return out
    if spec.q == spec.k:
        if not check_identity_I(spec):
            out.append(f"identity-I FAILED at {spec.label()}")
    elif not check_identity_II(spec):
        out.append(f"identity-II FAILED at {spec.label()}")
    if not check_lowest_eop_propto_g(spec):
        out.append(f"lowest-EOP proportional to shifted g FAILED at {spec.label()}")
    return out


def shape_applicable(spec: SeedSpec) -> bool:
    return is_nodeless(spec) and is_nodeless(spec.with_alpha(spec.alpha + 1))


def check_shape(spec: SeedSpec) -> list:
    if not shape_applicable(spec):
        return []
    if not check_shape_invariance(spec):
        return [f"shape-invariance FAILED at {spec.label()}"]
    return []


ORTHO_TOL = 1e-10


def check_orthogonality(spec: SeedSpec, levels: int = 5) -> list:
    if not is_nodeless(spec):
        return []
    G = gram_matrix(spec, levels)
    d = np.sqrt(np.diag(G))
    if np.any(np.diag(G) <= 0):
        return [f"orthogonality FAILED at {spec.label()}: non-positive norm"]
    R = np.abs(G / np.outer(d, d) - np.eye(levels))
    worst = float(R.max())
    if worst > ORTHO_TOL:
        return [f"orthogonality FAILED at {spec.label()}: off-diagonal {worst:.2e}"]
    return []


ENERGY_TOL = 1e-4
OVERLAP_TOL = 1e-5


def check_spectral(spec: SeedSpec, count: int = 5, grid: Grid = Grid()) -> list:
    if not is_nodeless(spec):
        return []
    try:
        res = solve_bound_states(extended_potential(spec), count, grid)
        overlaps = eigenfunction_overlaps(spec, count, grid)
    except XlagError as exc:
        return [f"isospectrality FAILED at {spec.label()}: {exc}"]
    out = []
    diff = np.abs(np.array(res.energies) - predicted_energies(spec, count))
    if diff.max() > ENERGY_TOL:
        out.append(f"isospectrality FAILED at {spec.label()}: max |dE|={diff.max():.2e}")
    worst = 1.0 - min(overlaps)
    if worst > OVERLAP_TOL:
        out.append(f"eigenfunction overlap FAILED at {spec.label()}: 1-overlap={worst:.2e}")
    return out


def check_negative(spec: SeedSpec) -> list:
    """Top-term substitution: Gamma is degenerate, Gamma-tilde is not."""
    k, q = spec.k, spec.q
    if not 0 < q < k:
        return []
    out = []
    naive = leading_term_gamma(spec).det()
    if naive:
        out.append(f"proportional-columns obstruction FAILED at {spec.label()}: "
                   f"top-term det(Gamma) = {naive} (k-q={k - q})")
    # shifted type-II columns keep the leading order alive
    top = leading_term_gamma_tilde(spec).det()
    deg = predict_degree(spec) + (k - q) * (k - q - 1)
    if not top or top.degree != deg or top.leading != predict_leading(spec):
        out.append(f"gamma-tilde top-term determinant FAILED at {spec.label()}")
    return out


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def suite_specs(name: str, kmax: int = 4, mmax: int = 5, alphas=DEFAULT_ALPHAS) -> list:
    """Configurations each suite runs over; the costlier suites use a smaller box."""
    if name in ("degree", "matrix", "identities", "negative"):
        return list(iter_specs(kmax, mmax, alphas))
    small = (min(kmax, 3), min(mmax, 4))
    if name == "eop":
        return list(iter_specs(min(kmax, 3), mmax, alphas))
    if name == "shape":
        return list(iter_specs(kmax, mmax, alphas))
    if name == "orthogonality":
        return [s for s in iter_specs(small[0], small[1], alphas[::2], kmin=1) if is_nodeless(s)]
    if name == "spectral":
        return [s for s in iter_specs(small[0], small[1], alphas, kmin=1) if is_nodeless(s)]
    raise ValueError(f"unknown suite {name!r}")


_CHECKS = {
    "degree": check_degree,
    "matrix": check_matrix,
    "eop": check_eop,
    "identities": check_identities,
    "shape": check_shape,
    "orthogonality": check_orthogonality,
    "spectral": check_spectral,
    "negative": check_negative,
}


def run_suite(name: str, kmax: int = 4, mmax: int = 5, alphas=DEFAULT_ALPHAS,
              workers: int = None, specs=None) -> SuiteReport:
    if specs is None:
        specs = suite_specs(name, kmax, mmax, alphas)
    results = pmap(_CHECKS[name], specs, workers)
    report = SuiteReport(name, checked=len(specs))
    for r in results:
        report.failures.extend(r)
    return report
