"""Shape invariance of the extended potentials and the identities it implies.

Functions of x are reduced to rational functions of z = omega x^2 / 2.  An
object of odd x-parity is stored as x * F(z), an even one as F(z); the
parity is tracked explicitly so that a potential that came out odd is
caught instead of silently compared.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .construct import SeedSpec, denominator, g_mixed, vandermonde
from .eop import eop_construct
from .errors import SingularPotential, ZeroDenominator
from .ratpoly import Poly, RationalFunc

__all__ = [
    "Quotient",
    "SuperpotentialSplit",
    "XGraded",
    "check_identity_I",
    "check_identity_II",
    "check_lowest_eop_propto_g",
    "check_shape_invariance",
    "ground_state_factor",
    "superpotential_split",
]


class Quotient:
    """Unreduced ``num/den`` pair; equality by cross-multiplication.

    Reducing every intermediate with a gcd dominates the cost of the
    shape-invariance check, and only the final comparison matters.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = None):
        self.num = num
        self.den = Poly.one() if den is None else den
        if not self.den:
            raise ZeroDenominator("quotient with zero denominator")

    @classmethod
    def lift(cls, x) -> "Quotient":
        if isinstance(x, Quotient):
            return x
        if isinstance(x, RationalFunc):
            return cls(x.num, x.den)
        if isinstance(x, Poly):
            return cls(x)
        return cls(Poly.constant(x))

    def __add__(self, other):
        other = Quotient.lift(other)
        if self.den == other.den:
            return Quotient(self.num + other.num, self.den)
        return Quotient(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Quotient(-self.num, self.den)

    def __sub__(self, other):
        return self + (-Quotient.lift(other))

    def __mul__(self, other):
        other = Quotient.lift(other)
        return Quotient(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = Quotient.lift(other)
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def derivative(self) -> "Quotient":
        n, d = self.num, self.den
        return Quotient(n.derivative() * d - n * d.derivative(), d * d)

    def reduced(self) -> RationalFunc:
        return RationalFunc(self.num, self.den)


@dataclass(frozen=True)
class XGraded:
    """x**parity * value(z), with x^2 = 2z/omega."""

    parity: int
    value: Quotient
    omega: Fraction

    def __add__(self, other: "XGraded") -> "XGraded":
        if self.parity != other.parity:
            raise ValueError("adding terms of different x-parity")
        return XGraded(self.parity, self.value + other.value, self.omega)

    def __mul__(self, other: "XGraded") -> "XGraded":
        value = self.value * other.value
        parity = self.parity + other.parity
        if parity == 2:
            value = value * Poly([0, 2 / self.omega])
            parity = 0
        return XGraded(parity, value, self.omega)

    def d_dx(self) -> "XGraded":
        # d/dx = omega x d/dz
        F = self.value
        if self.parity == 0:
            return XGraded(1, self.omega * F.derivative(), self.omega)
        # d/dx (x F) = F + 2 z F'
        return XGraded(0, F + Poly([0, 2]) * F.derivative(), self.omega)


def _log_derivative(g: Poly) -> Quotient:
    return Quotient(g.derivative(), g)


@dataclass(frozen=True)
class SuperpotentialSplit:
    """W = x * w1 + x * w2_over_x, both pieces odd in x.

    ``w1`` holds the conventional part omega x/2 - (l+1)/x as x * w1(z).
    """

    w1: Quotient
    w2_over_x: Quotient
    omega: Fraction

    def total(self) -> XGraded:
        return XGraded(1, self.w1 + self.w2_over_x, self.omega)


def superpotential_split(spec: SeedSpec) -> SuperpotentialSplit:
    omega = spec.omega
    l1 = spec.l + 1
    # (l+1)/x = x (l+1) omega / (2 z)
    w1 = Quotient(Poly([-l1 * omega, omega]), Poly([0, 2]))
    g0 = denominator(spec)
    g1 = denominator(spec.with_alpha(spec.alpha + 1))
    w2 = -omega * (_log_derivative(g1) - _log_derivative(g0))
    return SuperpotentialSplit(w1, w2, omega)


def _extended_potential(spec: SeedSpec) -> Quotient:
    """V_l + V_rat as a function of z."""
    omega, l = spec.omega, spec.l
    g = denominator(spec)
    g1, g2 = g.derivative(), g.derivative().derivative()
    z = Poly.z()
    # omega^2 x^2/4 = omega z/2 ; l(l+1)/x^2 = l(l+1) omega / (2z)
    conventional = Quotient(Poly([l * (l + 1) * omega, 0, omega]), Poly([0, 2]))
    v_rat = Quotient(-2 * omega * (g * g1 + 2 * z * (g * g2 - g1 * g1)), g * g)
    return conventional + v_rat


def _require_nodeless(spec: SeedSpec):
    if not g_mixed(spec).nodeless:
        raise SingularPotential(f"g has a zero on the positive half-line for {spec.label()}")


def check_shape_invariance(spec: SeedSpec) -> bool:
    """Partner of V_{l,ext} built from its ground state equals V_{l+1,ext} + const.

    Also confirms that W^2 - W' + E0 gives back V_{l,ext}, i.e. that the
    assumed factorization function really is its ground state.
    """
    shifted = spec.with_alpha(spec.alpha + 1)
    _require_nodeless(spec)
    _require_nodeless(shifted)
    omega = spec.omega
    e0 = omega * (spec.alpha + 1)
    e0_next = omega * (spec.alpha + 2)
    W = superpotential_split(spec).total()
    W2 = W * W
    dW = W.d_dx()
    if W2.parity or dW.parity:
        return False
    v_minus = W2.value + dW.value + e0
    v_plus = W2.value - dW.value + e0
    rhs = _extended_potential(shifted) - e0_next + 2 * omega + e0
    return v_plus == _extended_potential(spec) and v_minus == rhs


def ground_state_factor(spec: SeedSpec) -> Fraction:
    """Ratio between the lowest EOP and g with alpha shifted by one."""
    k, q = spec.k, spec.q
    e = sum(spec.m_I) - q * (q - 1) // 2 - (k - q) * (k - q - 1) // 2
    return Fraction((-1) ** (e % 2), vandermonde(spec.m_I) * vandermonde(spec.m_II))


def check_lowest_eop_propto_g(spec: SeedSpec) -> bool:
    y0 = eop_construct(spec, 0).y
    return y0 == ground_state_factor(spec) * denominator(spec.with_alpha(spec.alpha + 1))


def _g(spec: SeedSpec, alpha) -> Poly:
    return denominator(spec.with_alpha(alpha))


def check_identity_I(spec: SeedSpec) -> bool:
    """[g (d/dz - 1) - g'] g1 = -g1(alpha-1) g(alpha+1), g1 from the first k-1 seeds."""
    if spec.m_II or not spec.m_I:
        raise ValueError("identity I needs a pure type-I configuration with k >= 1")
    a = spec.alpha
    prev = spec.drop_last()
    g, p = _g(spec, a), _g(prev, a)
    lhs = g * (p.derivative() - p) - g.derivative() * p
    return lhs == -(_g(prev, a - 1) * _g(spec, a + 1))


def check_identity_II(spec: SeedSpec) -> bool:
    """[g (z d/dz + alpha+1) - z g'] g1(alpha+2) = (alpha+k-2q-m_k) g1(alpha+1) g(alpha+1)."""
    if not spec.m_II:
        raise ValueError("identity II needs at least one type-II seed")
    a, k, q = spec.alpha, spec.k, spec.q
    prev = spec.drop_last()
    g, p = _g(spec, a), _g(prev, a + 2)
    z = Poly.z()
    lhs = g * (z * p.derivative() + (a + 1) * p) - z * g.derivative() * p
    rhs = (a + k - 2 * q - spec.m_II[-1]) * _g(prev, a + 1) * _g(spec, a + 1)
    return lhs == rhs
