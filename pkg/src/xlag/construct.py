"""Denominator polynomials of the rationally extended radial oscillator.

A seed configuration is ``q`` type-I indices and ``k - q`` type-II indices on
top of a conventional potential with parameter ``alpha' = alpha + k - 2q``.
The denominator polynomial g is taken from the Gamma-matrix determinant for
every q; the plain z-Wronskian of the pure cases is kept as a second route.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .errors import InvalidSeedSpec, SingularPotential
from .laguerre import laguerre, pochhammer
from .ratpoly import Poly, PolyMatrix, RationalFunc, as_rational, sturm_count_positive_roots

__all__ = [
    "GResult",
    "SeedSpec",
    "alpha_base",
    "denominator",
    "g_mixed",
    "g_pure",
    "gamma_matrix",
    "gamma_tilde_matrix",
    "gamma_tilde_via_binomial",
    "leading_term_gamma",
    "leading_term_gamma_tilde",
    "predict_degree",
    "predict_leading",
    "v_rational",
    "vandermonde",
]


def _index_tuple(values, label: str) -> tuple:
    out = tuple(values)
    for m in out:
        if isinstance(m, bool) or not isinstance(m, int):
            raise InvalidSeedSpec(f"{label} indices must be integers, got {m!r}")
        if m < 1:
            raise InvalidSeedSpec(f"{label} indices must be >= 1, got {m}")
    if any(b <= a for a, b in zip(out, out[1:])):
        raise InvalidSeedSpec(f"{label} indices must be strictly increasing, got {list(out)}")
    return out


@dataclass(frozen=True, order=True)
class SeedSpec:
    """Seed configuration I^q II^(k-q) with final parameter ``alpha = l + 1/2``.

    Any rational ``alpha`` is representable because the recursion and the
    shape-invariance identities need shifted configurations (``alpha - 1``,
    ``alpha + 2``, ...).  :meth:`validate` enforces ``alpha > 0`` for
    user-facing input.
    """

    alpha: Fraction
    m_I: tuple = ()
    m_II: tuple = ()
    omega: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "omega", as_rational(self.omega))
        object.__setattr__(self, "m_I", _index_tuple(self.m_I, "type-I"))
        object.__setattr__(self, "m_II", _index_tuple(self.m_II, "type-II"))
        if self.omega <= 0:
            raise InvalidSeedSpec(f"omega must be positive, got {self.omega}")

    def validate(self) -> "SeedSpec":
        if self.alpha <= 0:
            raise InvalidSeedSpec(f"alpha must be positive, got {self.alpha}")
        return self

    @property
    def k(self) -> int:
        return len(self.m_I) + len(self.m_II)

    @property
    def q(self) -> int:
        return len(self.m_I)

    @property
    def indices(self) -> tuple:
        return self.m_I + self.m_II

    @property
    def l(self) -> Fraction:
        return self.alpha - Fraction(1, 2)

    def with_alpha(self, alpha) -> "SeedSpec":
        return replace(self, alpha=as_rational(alpha))

    def drop_last(self) -> "SeedSpec":
        """The (k-1)-seed configuration reached before the last seed is added.

        The last seed is the top type-II index when there is one, otherwise
        the top type-I index.
        """
        if self.m_II:
            return replace(self, m_II=self.m_II[:-1])
        if self.m_I:
            return replace(self, m_I=self.m_I[:-1])
        raise ValueError("the empty configuration has no last seed")

    def label(self) -> str:
        return (f"alpha={self.alpha} omega={self.omega} "
                f"I={list(self.m_I)} II={list(self.m_II)}")


@dataclass(frozen=True)
class GResult:
    g: Poly
    mu: int
    leading: Fraction
    nodeless: bool

    @classmethod
    def from_poly(cls, g: Poly) -> "GResult":
        return cls(g, g.degree, g.leading, sturm_count_positive_roots(g) == 0)


def alpha_base(spec: SeedSpec) -> Fraction:
    """Parameter of the conventional potential the construction starts from."""
    return spec.alpha + spec.k - 2 * spec.q


def _top_term(n: int, negate: bool) -> Poly:
    # leading term of L^(a)_n(z) is (-z)^n/n!, of L^(a)_n(-z) it is z^n/n!
    if n < 0:
        return Poly.zero()
    c = Fraction(1 if negate or n % 2 == 0 else -1, factorial(n))
    return Poly.monomial(n, c)


def _gamma_entry(spec: SeedSpec, i: int, j: int, lag=laguerre) -> Poly:
    # 1-based i, j
    ap = alpha_base(spec)
    k, q, m = spec.k, spec.q, spec.indices[j - 1]
    if j <= q:
        return lag(m - i + 1, ap + i - 1, True)
    coeff = pochhammer(m + 1, i - 1)
    return coeff * lag(m + i - 1, -ap - i + 1, False).shift_degree(k - i)


def _gamma_tilde_entry(spec: SeedSpec, i: int, j: int, lag=laguerre) -> Poly:
    q = spec.q
    if i <= q + 1:
        return _gamma_entry(spec, i, j, lag)
    ap = alpha_base(spec)
    k, m = spec.k, spec.indices[j - 1]
    if j <= q:
        return lag(m - q, ap + i - 1, True)
    coeff = pochhammer(m + 1, q) * pochhammer(m - ap - i + q + 2, i - q - 1)
    return coeff * lag(m + q, -ap - i + 1, False).shift_degree(k - i)


def _top_laguerre(n, a, negate):
    return _top_term(n, negate)


def gamma_matrix(spec: SeedSpec) -> PolyMatrix:
    k = spec.k
    if k < 1:
        raise ValueError("Gamma matrix needs at least one seed")
    return PolyMatrix.from_function(k, k, lambda i, j: _gamma_entry(spec, i + 1, j + 1))


def gamma_tilde_matrix(spec: SeedSpec) -> PolyMatrix:
    """Transformed Gamma matrix from the closed-form entries."""
    k = spec.k
    if k < 1:
        raise ValueError("Gamma matrix needs at least one seed")
    return PolyMatrix.from_function(k, k, lambda i, j: _gamma_tilde_entry(spec, i + 1, j + 1))


def gamma_tilde_via_binomial(spec: SeedSpec) -> PolyMatrix:
    """Transformed Gamma matrix from binomial row combinations of Gamma."""
    gam = gamma_matrix(spec)
    k, q = spec.k, spec.q

    def entry(i0, j0):
        i = i0 + 1
        if i <= q + 1:
            return gam[i0, j0]
        total = Poly.zero()
        for r in range(q + 1, i + 1):
            total = total + comb(i - q - 1, i - r) * gam[r - 1, j0]
        return total

    return PolyMatrix.from_function(k, k, entry)


def leading_term_gamma(spec: SeedSpec) -> PolyMatrix:
    """Gamma with every Laguerre polynomial replaced by its top-degree term."""
    k = spec.k
    return PolyMatrix.from_function(
        k, k, lambda i, j: _gamma_entry(spec, i + 1, j + 1, _top_laguerre))


def leading_term_gamma_tilde(spec: SeedSpec) -> PolyMatrix:
    k = spec.k
    return PolyMatrix.from_function(
        k, k, lambda i, j: _gamma_tilde_entry(spec, i + 1, j + 1, _top_laguerre))


def g_pure(spec: SeedSpec) -> GResult:
    """z-Wronskian of the seed polynomials for the pure I^k or II^k cases."""
    if spec.m_I and spec.m_II:
        raise ValueError("g_pure needs a pure configuration (q = 0 or q = k)")
    if spec.k == 0:
        return GResult.from_poly(Poly.one())
    ap = alpha_base(spec)
    if spec.m_I:
        funcs = [laguerre(m, ap, True) for m in spec.m_I]
    else:
        funcs = [laguerre(m, -ap) for m in spec.m_II]
    rows = [funcs]
    for _ in range(spec.k - 1):
        rows.append([f.derivative() for f in rows[-1]])
    return GResult.from_poly(PolyMatrix.from_rows(rows).det())


@lru_cache(maxsize=8192)
def _denominator(alpha: Fraction, m_I: tuple, m_II: tuple) -> Poly:
    spec = SeedSpec(alpha, m_I, m_II)
    k, q = spec.k, spec.q
    if k == 0:
        return Poly.one()
    det = gamma_matrix(spec).det()
    return det.divexact(Poly.monomial((k - q) * (k - q - 1)))


def denominator(spec: SeedSpec) -> Poly:
    """g for ``spec`` via the Gamma determinant (memoized; omega-independent)."""
    return _denominator(spec.alpha, spec.m_I, spec.m_II)


def g_mixed(spec: SeedSpec) -> GResult:
    return GResult.from_poly(denominator(spec))


def predict_degree(spec: SeedSpec) -> int:
    k, q = spec.k, spec.q
    return sum(spec.indices) - q * (q - 1) // 2 - (k - q) * (k - q - 1) // 2 + q * (k - q)


def vandermonde(ms) -> int:
    ms = list(ms)
    return prod(ms[j] - ms[i] for i in range(len(ms)) for j in range(i + 1, len(ms)))


def predict_leading(spec: SeedSpec) -> Fraction:
    k, q = spec.k, spec.q
    sigma = sum(spec.m_II) + q * (k - q)
    num = vandermonde(spec.m_I) * vandermonde(spec.m_II)
    den = prod(factorial(m) for m in spec.indices)
    return Fraction((-1) ** sigma * num, den)


def v_rational_of(g: Poly, omega) -> RationalFunc:
    """-2 omega [g'/g + 2z (g''/g - (g'/g)^2)] as a reduced function of z."""
    omega = as_rational(omega)
    z = Poly.z()
    g1, g2 = g.derivative(), g.derivative().derivative()
    num = g * g1 + 2 * z * (g * g2 - g1 * g1)
    return RationalFunc(-2 * omega * num, g * g)


def v_rational(spec: SeedSpec) -> RationalFunc:
    res = g_mixed(spec)
    if not res.nodeless:
        raise SingularPotential(f"g has a zero on the positive half-line for {spec.label()}")
    return v_rational_of(res.g, spec.omega)
