"""Exceptional Laguerre polynomials from k-th order supersymmetric quantum mechanics.

Exact construction of the denominator polynomials, the exceptional
polynomials and the rationally extended radial oscillator potentials, with
symbolic and numerical cross-checks.
"""

__version__ = "0.1.0"

from .construct import (  # noqa: E402
    GResult,
    SeedSpec,
    alpha_base,
    g_mixed,
    g_pure,
    gamma_matrix,
    gamma_tilde_matrix,
    gamma_tilde_via_binomial,
    predict_degree,
    predict_leading,
    v_rational,
)
from .eop import EOPResult, check_eop_ode, eop_construct  # noqa: E402
from .errors import (  # noqa: E402
    DegenerateStep,
    GridTooSmall,
    InvalidSeedSpec,
    NonExactDivision,
    SingularPotential,
    ZeroDenominator,
)
from .laguerre import laguerre, pochhammer  # noqa: E402
from .ratpoly import Poly, PolyMatrix, RationalFunc  # noqa: E402
