"""Generalized Laguerre polynomials with exact rational parameter."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .ratpoly import Poly, as_rational

__all__ = [
    "LaguerreSpec",
    "check_contiguous_relations",
    "check_derivative_identities",
    "laguerre",
    "pochhammer",
]


@dataclass(frozen=True)
class LaguerreSpec:
    n: int
    alpha: Fraction
    negate_argument: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Laguerre degree must be non-negative, got {self.n}")
        object.__setattr__(self, "alpha", as_rational(self.alpha))


@lru_cache(maxsize=4096)
def _laguerre(n: int, alpha: Fraction) -> Poly:
    # (j+1) L_{j+1} = (2j + alpha + 1 - z) L_j - (j + alpha) L_{j-1}
    prev, cur = Poly.one(), Poly([1 + alpha, -1])
    if n == 0:
        return prev
    z = Poly.z()
    for j in range(1, n):
        nxt = ((2 * j + 1 + alpha) * cur - z * cur - (j + alpha) * prev) / (j + 1)
        prev, cur = cur, nxt
    return cur


def laguerre(spec, alpha=None, negate_argument: bool = False) -> Poly:
    """L^(alpha)_n(z), or L^(alpha)_n(-z) when ``negate_argument`` is set.

    Accepts either a :class:`LaguerreSpec` or ``(n, alpha)`` positionally.
    A negative ``n`` gives the zero polynomial (the convention used inside
    the Gamma matrices).
    """
    if isinstance(spec, LaguerreSpec):
        n, a, neg = spec.n, spec.alpha, spec.negate_argument
    else:
        n, a, neg = spec, as_rational(alpha), negate_argument
        if n < 0:
            return Poly.zero()
    p = _laguerre(n, a)
    return p.negate_argument() if neg else p


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1)."""
    if n < 0:
        raise ValueError("Pochhammer symbol needs n >= 0")
    a = as_rational(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def check_derivative_identities(m: int, alpha_prime) -> bool:
    """Derivative relations for type-I and type-II seed polynomials.

    d/dz L^(a)_m(-z) = L^(a+1)_{m-1}(-z), and the derivative of
    z^-a e^-z L^(-a)_m(z) written with the exponential prefactor cleared:
    z L'(z) - (a + z) L(z) = (m+1) L^(-a-1)_{m+1}(z) with L = L^(-a)_m.
    """
    a = as_rational(alpha_prime)
    z = Poly.z()
    first = laguerre(m, a, True).derivative() == laguerre(m - 1, a + 1, True)
    L = laguerre(m, -a)
    lhs = z * L.derivative() - (z + a) * L
    second = lhs == (m + 1) * laguerre(m + 1, -a - 1)
    return first and second


def check_contiguous_relations(m: int, alpha) -> bool:
    a = as_rational(alpha)
    z = Poly.z()
    first = z * laguerre(m, a + 1) + (m + 1) * laguerre(m + 1, a) == (m + a + 1) * laguerre(m, a)
    second = laguerre(m, a - 1) + laguerre(m - 1, a) == laguerre(m, a)
    return first and second
