"""Exact rational polynomial algebra in a single variable z.

Coefficients are :class:`fractions.Fraction` values stored densely in
ascending powers.  Everything here is immutable, so instances can be shared
freely between threads and used as dictionary keys.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence, Union

from .errors import NonExactDivision, ZeroDenominator

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "NEG_INF",
    "Poly",
    "PolyMatrix",
    "Rational",
    "RationalFunc",
    "as_rational",
    "poly_arith",
    "poly_derivative",
    "poly_divexact",
    "poly_gcd",
    "polymat_det",
    "ratfunc_normalize",
    "sturm_chain",
    "sturm_count_positive_roots",
]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"7/2"`` to a Fraction.

    Floats are rejected: they would smuggle rounding into exact code paths.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(value, (int, str)):
        return Fraction(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


class _NegativeInfinity:
    """Degree of the zero polynomial.

    Orders below every integer but refuses arithmetic, so code that adds
    degrees has to handle the zero polynomial explicitly.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("xlag.NEG_INF")

    def _no_arith(self, *_):
        raise TypeError("arithmetic on the degree of the zero polynomial")

    __add__ = __radd__ = __sub__ = __rsub__ = __mul__ = __rmul__ = _no_arith
    __neg__ = __int__ = __index__ = _no_arith


NEG_INF = _NegativeInfinity()


class Poly:
    """Dense univariate polynomial with exact rational coefficients.

    ``Poly([a0, a1, a2])`` is ``a0 + a1*z + a2*z**2``.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rational(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self._c = tuple(c)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list) -> "Poly":
        # trusted fast path: coeffs are Fractions
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = object.__new__(cls)
        p._c = tuple(coeffs)
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw([])

    @classmethod
    def one(cls) -> "Poly":
        return cls._raw([Fraction(1)])

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls._raw([as_rational(c)])

    @classmethod
    def monomial(cls, n: int, c=1) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        return cls._raw([Fraction(0)] * n + [as_rational(c)])

    @classmethod
    def z(cls) -> "Poly":
        return cls.monomial(1)

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def lowest_nonzero(self) -> Fraction:
        for c in self._c:
            if c:
                return c
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._c):
            return self._c[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Poly.constant(other)._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._c)
        return self._hash

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self._c)}])"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for i, c in enumerate(self._c):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "z" if i == 1 else f"z^{i}"
                terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"({c})*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self._c])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = Fraction(other)
            return Poly._raw([c * x for x in self._c]) if c else Poly.zero()
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return Poly.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # scalar division only; polynomial quotients go through divexact/divmod
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                raise ZeroDivisionError("polynomial divided by zero scalar")
            c = 1 / Fraction(other)
            return Poly._raw([c * x for x in self._c])
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, x):
        """Horner evaluation; exact for Fraction/int arguments."""
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def to_float(self) -> list:
        """Coefficients rounded to floats, ascending powers."""
        return [float(c) for c in self._c]

    def float_evaluator(self) -> Callable:
        """Return a vectorizable float Horner evaluator (numpy arrays accepted)."""
        fc = self.to_float()[::-1]

        def evaluate(x):
            acc = 0.0 * x
            for c in fc:
                acc = acc * x + c
            return acc

        return evaluate

    def derivative(self) -> "Poly":
        return Poly._raw([i * c for i, c in enumerate(self._c) if i])

    def negate_argument(self) -> "Poly":
        """p(z) -> p(-z)."""
        return Poly._raw([-c if i & 1 else c for i, c in enumerate(self._c)])

    def shift_degree(self, n: int) -> "Poly":
        """Multiply by z**n."""
        if not self._c:
            return self
        return Poly._raw([Fraction(0)] * n + list(self._c))

    def monic(self) -> "Poly":
        if not self._c:
            return self
        return self / self._c[-1]

    def divmod(self, other: "Poly") -> tuple:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self._c)
        db = len(other._c) - 1
        lb = other._c[-1]
        if len(r) - 1 < db:
            return Poly.zero(), self
        q = [Fraction(0)] * (len(r) - db)
        b = other._c
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if not c:
                continue
            c = c / lb
            q[k - db] = c
            for j in range(db + 1):
                r[k - db + j] -= c * b[j]
        return Poly._raw(q), Poly._raw(r[:db] if db else [])

    def divexact(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if r:
            raise NonExactDivision(f"({self}) is not divisible by ({other}); remainder {r}")
        return q


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


def poly_divexact(a: Poly, b: Poly) -> Poly:
    return a.divexact(b)


def _primitive_int(c: Sequence[Fraction]) -> list:
    """Integer coefficient list proportional to ``c`` with content 1."""
    den = 1
    for x in c:
        den = den * x.denominator // gcd(den, x.denominator)
    return _strip_content([x.numerator * (den // x.denominator) for x in c])


def _strip_content(ints: list) -> list:
    cont = gcd(*ints)
    if ints[-1] < 0:
        cont = -cont
    return [v // cont for v in ints] if cont != 1 else ints


def _prem_int(a: list, b: list) -> list:
    # pseudo-remainder of integer coefficient lists (ascending powers)
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        c, shift = r[-1], len(r) - 1 - db
        r = [lb * x for x in r]
        for j, y in enumerate(b):
            r[shift + j] -= c * y
        r.pop()
        while r and not r[-1]:
            r.pop()
    return r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (zero if both inputs are zero).

    Runs a primitive pseudo-remainder sequence on integer coefficients,
    which is far cheaper than Euclid over Fractions.
    """
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    x, y = _primitive_int(a.coeffs), _primitive_int(b.coeffs)
    if len(x) < len(y):
        x, y = y, x
    while y:
        if len(y) == 1:
            return Poly.one()
        r = _prem_int(x, y)
        x, y = y, (_strip_content(r) if r else r)
    return Poly(x).monic()


# --- root counting -------------------------------------------------------

def sturm_chain(p: Poly) -> list:
    """Sturm sequence p, p', -rem(p, p'), ..."""
    chain = [p, p.derivative()]
    while chain[-1]:
        chain.append(-chain[-2].divmod(chain[-1])[1])
    chain.pop()
    return chain


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for s, t in zip(nz, nz[1:]) if s != t)


def sturm_count_positive_roots(p: Poly) -> int:
    """Number of distinct real roots of ``p`` in the open interval (0, oo)."""
    if not p:
        raise ValueError("the zero polynomial has infinitely many roots")
    chain = sturm_chain(p)
    at_zero = [_sign(q.lowest_nonzero()) for q in chain]
    at_inf = [_sign(q.leading) for q in chain]
    return _variations(at_zero) - _variations(at_inf)


# --- polynomial matrices -------------------------------------------------

@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        nr, nc = len(rows), len(rows[0]) if rows else 0
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(e if isinstance(e, Poly) else Poly.constant(e) for r in rows for e in r)
        return cls(nr, nc, flat)

    @classmethod
    def from_function(cls, n: int, m: int, fn) -> "PolyMatrix":
        """Build from ``fn(i, j)`` with zero-based indices."""
        return cls.from_rows([[fn(i, j) for j in range(m)] for i in range(n)])

    def __getitem__(self, ij) -> Poly:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, tuple(fn(e) for e in self.entries))

    def det(self, method: str = "bareiss") -> Poly:
        return polymat_det(self, method)


def _det_bareiss(m: PolyMatrix) -> Poly:
    n = m.rows
    a = m.to_rows()
    sign = 1
    prev = Poly.one()
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Poly.zero()
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = a[i][j] * piv - aik * a[k][j]
                a[i][j] = num.divexact(prev) if k else num
        prev = piv
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def _det_cofactor(rows: list) -> Poly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Poly.zero()
    for j, e in enumerate(rows[0]):
        if not e:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = e * _det_cofactor(minor)
        total = total - term if j & 1 else total + term
    return total


def polymat_det(m: PolyMatrix, method: str = "bareiss") -> Poly:
    """Exact determinant; ``method`` is ``"bareiss"`` (default) or ``"cofactor"``."""
    if m.rows != m.cols:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if method == "bareiss":
        return _det_bareiss(m)
    if method == "cofactor":
        return _det_cofactor(m.to_rows())
    raise ValueError(f"unknown determinant method {method!r}")


# --- rational functions --------------------------------------------------

class RationalFunc:
    """Reduced quotient ``num/den`` with a monic denominator.

    Equality is structural on the canonical form.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = None):
        if den is None:
            den = Poly.one()
        if not den:
            raise ZeroDenominator("rational function with zero denominator")
        if not num:
            num, den = Poly.zero(), Poly.one()
        else:
            g = poly_gcd(num, den)
            if g.degree != 0:
                num, den = num.divexact(g), den.divexact(g)
            lc = den.leading
            if lc != 1:
                num, den = num / lc, den / lc
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalFunc":
        return cls(p)

    def __repr__(self):
        return f"RationalFunc(({self.num}) / ({self.den}))"

    def __eq__(self, other):
        if isinstance(other, Poly):
            other = RationalFunc(other)
        if isinstance(other, (int, Fraction)):
            other = RationalFunc(Poly.constant(other))
        if not isinstance(other, RationalFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    @staticmethod
    def _lift(x) -> "RationalFunc":
        if isinstance(x, RationalFunc):
            return x
        if isinstance(x, Poly):
            return RationalFunc(x)
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return RationalFunc(Poly.constant(x))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunc(self.num + other.num, self.den)
        return RationalFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(RationalFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RationalFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDenominator("division by the zero rational function")
        return RationalFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other / self

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def derivative(self) -> "RationalFunc":
        n, d = self.num, self.den
        return RationalFunc(n.derivative() * d - n * d.derivative(), d * d)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0


def ratfunc_normalize(num: Poly, den: Poly) -> RationalFunc:
    return RationalFunc(num, den)
