"""Exact umbral calculus over Q: power series as functionals on polynomials,
Sheffer/Appell sequences, and the Bernoulli/Euler expansion identities."""
from .algebra import Polynomial, Rational, fmt_rational, parse_rational
from .classical import (
    bernoulli_number,
    bernoulli_number_order,
    bernoulli_poly,
    bernoulli_poly_order,
    euler_number,
    euler_poly,
)
from .errors import CompositionError, DomainError, OrderError, TruncationError, UmbraError
from .identities import (
    euler_in_bernoulli,
    expand_bernoulli_basis,
    expand_bernoulli_order_basis,
    product_expansion_check,
    theorem4_coefficients,
    verify_all,
)
from .series import PowerSeries, operator_apply, pairing
from .sheffer import BasisExpansion, ShefferPair, appell_poly, sheffer_poly

__version__ = "0.1.0"
