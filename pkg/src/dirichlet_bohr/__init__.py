"""Certified Bohr and Rogosinski abscissa constants for ordinary Dirichlet series."""

from .enclosure import ErrorBoundedValue
from .errors import (
    BohrError,
    BracketError,
    DomainError,
    InvalidArgumentError,
    OutOfRangeError,
    PrecisionError,
    ResourceError,
)
from .lift import (
    DirichletPolynomial,
    LatticeSpec,
    MonomialExpansion,
    evaluate_dirichlet,
    evaluate_monomials,
    lattice_for_degree,
    lift,
    rogosinski_halfplane_bound,
)
from .oracles import OracleReport, direct_sum_oracle, lattice_enumeration_check
from .primes import PrimeTable, build_prime_table, factorize, omega
from .solver import (
    AbscissaResult,
    bohr_bound_modulus,
    bohr_bound_squared,
    radius_to_abscissa,
    rogosinski_radius,
    solve_abscissa,
)
from .zeta import (
    DEFAULT_POLICY,
    TruncationPolicy,
    almost_prime_zeta,
    bohr_sum,
    prime_zeta,
    riemann_zeta,
)

__version__ = "0.1.0"
