"""Weighted-sieve bounds for almost-prime values f(p), plus empirical checks."""

from .arith import FactorizationRecord, factorize, is_prime, primes_in, primes_upto, totient
from .bound_optimizer import (
    BoundParams,
    BoundResult,
    asymptotic_constant,
    bound_table,
    integral_one,
    integral_two,
    large_k_profile,
    minimize_r,
    r_bound,
    r_bound_general,
    solve_delta0,
)
from .empirical import (
    DyadicSample,
    EmpiricalReport,
    count_almost_primes,
    empirical_report,
    remainder_stats,
    square_divisor_count,
    weighted_sum,
)
from .errors import *  # noqa: F401,F403
from .polynomial import (
    IntPolynomial,
    check_local_condition,
    eval_poly,
    local_condition_failure,
    mertens_diagnostics,
    nu1,
    nu1_many,
    nu2,
    nu_squarefree,
    parse_polynomial,
)
from .sieve_functions import DEFAULT_CONSTANTS, SieveConstants, lower_f1, upper_F1, upper_F2

__version__ = "0.1.0"
