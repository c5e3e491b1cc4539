"""Minimal r for which f(p) is infinitely often a P_r, as a function of deg f.

The admissibility inequality reads r > r(k, beta0) with

    r(k, beta0) = k/beta0 - 1 + [2 A1 I1 + e^{-gamma} A2 I2] / (2 A1 log 3)

where I1, I2 are the two elementary integrals below, alpha0 = 1/8 and delta0
is the crossover root from :func:`solve_delta0`. Everything here is closed
form except :func:`r_bound_general`, which integrates the sieve functions
numerically and serves as an independent check on the closed form.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from scipy import integrate

from .errors import DomainError, Infeasible, NoRootInRange, RangeUnavailable
from .sieve_functions import (
    DEFAULT_CONSTANTS,
    SieveConstants,
    lower_f1,
    upper_F1,
    upper_F2,
)

ALPHA0 = 0.125
INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
GRID_POINTS = 64


@dataclass(frozen=True)
class BoundParams:
    k: int
    alpha0: float
    delta0: float
    beta0: float

    def __post_init__(self):
        if self.k < 2:
            raise DomainError(f"degree must be >= 2, got {self.k}")
        if not 0.0 < self.alpha0 < self.delta0 < self.beta0 < 1.0:
            raise DomainError(
                "need 0 < alpha0 < delta0 < beta0 < 1, got "
                f"({self.alpha0}, {self.delta0}, {self.beta0})")
        if self.delta0 >= 0.5:
            raise DomainError(f"delta0 must be < 1/2, got {self.delta0}")


@dataclass(frozen=True)
class BoundResult:
    k: int
    beta0_opt: float
    r_real: float
    r_int: int
    constraint_ok: bool

    @property
    def eta(self) -> float:
        """Weight threshold r + 1 - 1/beta at the unscaled beta = beta0/k."""
        return self.r_int + 1 - self.k / self.beta0_opt

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "beta0": self.beta0_opt,
            "r_real": self.r_real,
            "r_int": self.r_int,
            "constraint_ok": self.constraint_ok,
        }


@functools.lru_cache(maxsize=32)
def solve_delta0(c: SieveConstants = DEFAULT_CONSTANTS) -> float:
    """Root in [0, 1/2) of 2 A1 / (1 - 2d) = e^{-gamma} A2 / (1 - d)**2.

    Clearing denominators gives a d**2 + 2(b - a) d + (a - b) = 0 with
    a = 2 A1, b = e^{-gamma} A2, whose roots are ((a - b) +- sqrt(b (b - a))) / a.
    """
    a = 2.0 * c.a1
    b = math.exp(-c.gamma) * c.a2
    disc = b * (b - a)
    if -1e-12 * b * b < disc < 0:
        disc = 0.0  # double root, lost to rounding
    if disc < 0:
        raise NoRootInRange(f"no real root: e^-gamma A2 = {b} < 2 A1 = {a}")
    sq = math.sqrt(disc)
    for root in ((a - b) + sq) / a, ((a - b) - sq) / a:
        if 0.0 <= root < 0.5:
            return root
    raise NoRootInRange("delta0 root not in [0, 1/2)")


def integral_one(alpha0: float, delta0: float, beta0: float) -> float:
    """Closed form of the integral of (1/s - 1/beta0) / (1 - 2s) over [alpha0, delta0]."""
    if not 0.0 < alpha0 <= delta0:
        raise DomainError(f"need 0 < alpha0 <= delta0, got ({alpha0}, {delta0})")
    if delta0 >= 0.5:
        raise DomainError(f"integration bounds must be < 1/2, got delta0={delta0}")
    if beta0 <= 0.0:
        raise DomainError(f"beta0 must be positive, got {beta0}")

    def anti(s):
        return math.log(s / (1.0 - 2.0 * s)) + math.log1p(-2.0 * s) / (2.0 * beta0)

    return anti(delta0) - anti(alpha0)


def integral_two(delta0: float, beta0: float) -> float:
    """Closed form of the integral of (1/s - 1/beta0) / (1 - s)**2 over [delta0, beta0]."""
    if not 0.0 < delta0 <= beta0:
        raise DomainError(f"need 0 < delta0 <= beta0, got ({delta0}, {beta0})")
    if beta0 >= 1.0:
        raise DomainError(f"beta0 must be < 1, got {beta0}")
    lead = 1.0 - 1.0 / beta0

    def anti(s):
        return math.log(s / (1.0 - s)) + lead / (1.0 - s)

    return anti(beta0) - anti(delta0)


def _check_explicit_ranges(c: SieveConstants, alpha0: float, delta0: float) -> None:
    if (1.0 - 2.0 * alpha0) / (2.0 * alpha0) > 3.0:
        raise RangeUnavailable(f"alpha0={alpha0} pushes F_1 past s=3")
    if (1.0 - delta0) / alpha0 > c.beta2 + 1.0:
        raise RangeUnavailable(
            f"(1 - delta0)/alpha0 = {(1.0 - delta0) / alpha0} exceeds beta2 + 1")


def r_bound(k: int, beta0: float, c: SieveConstants = DEFAULT_CONSTANTS) -> float:
    """r(k, beta0) at alpha0 = 1/8 and the optimal crossover delta0."""
    if k < 2:
        raise DomainError(f"degree must be >= 2, got {k}")
    delta0 = solve_delta0(c)
    if not delta0 < beta0 < 1.0:
        raise DomainError(f"beta0 must lie in ({delta0}, 1), got {beta0}")
    _check_explicit_ranges(c, ALPHA0, delta0)
    b = math.exp(-c.gamma) * c.a2
    i1 = integral_one(ALPHA0, delta0, beta0)
    i2 = integral_two(delta0, beta0)
    scale = 2.0 * c.a1 * math.log(1.0 / (2.0 * ALPHA0) - 1.0)
    return k / beta0 - 1.0 + (2.0 * c.a1 * i1 + b * i2) / scale


def r_bound_general(p: BoundParams, theta1_hat: float = 1.0,
                    theta2_hat: float = 1.0,
                    c: SieveConstants = DEFAULT_CONSTANTS) -> float:
    """Right-hand side of the admissibility inequality by direct quadrature.

    ``theta1_hat`` is 2k times the level used for the 1-dimensional sieve and
    ``theta2_hat`` is k times the level of the 2-dimensional sieve; both
    default to their limiting value 1.
    """
    a0, d0, b0 = p.alpha0, p.delta0, p.beta0
    f1 = lower_f1(c, theta1_hat / (2.0 * a0))
    # arguments decrease in s, so checking both ends covers the whole path
    for s in (a0, d0):
        upper_F1(c, (theta1_hat - 2.0 * s) / (2.0 * a0))
    for s in (d0, b0):
        upper_F2(c, (theta2_hat - s) / a0)

    def g1(s):
        return (1.0 / s - 1.0 / b0) * upper_F1(c, (theta1_hat - 2.0 * s) / (2.0 * a0))

    def g2(s):
        return (1.0 / s - 1.0 / b0) * upper_F2(c, (theta2_hat - s) / a0)

    i1, _ = integrate.quad(g1, a0, d0, epsabs=1e-13, epsrel=1e-13, limit=200)
    i2, _ = integrate.quad(g2, d0, b0, epsabs=1e-13, epsrel=1e-13, limit=200)
    return p.k / b0 - 1.0 + (i1 + math.exp(-c.gamma) / a0 * i2) / f1


def golden_section(fn, lo: float, hi: float, tol: float = 1e-6) -> float:
    """Minimiser of a unimodal ``fn`` on [lo, hi] to absolute tolerance ``tol``."""
    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1, f2 = fn(x1), fn(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - INV_PHI * (hi - lo)
            f1 = fn(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + INV_PHI * (hi - lo)
            f2 = fn(x2)
    return 0.5 * (lo + hi)


def _argmin(fn, lo: float, hi: float, tol: float) -> float:
    # coarse grid first, in case the objective is not unimodal on the whole interval
    step = (hi - lo) / (GRID_POINTS + 1)
    grid = [lo + step * (i + 1) for i in range(GRID_POINTS)]
    vals = [fn(b) for b in grid]
    i = min(range(GRID_POINTS), key=vals.__getitem__)
    a = grid[i - 1] if i > 0 else lo + 0.5 * step
    b = grid[i + 1] if i < GRID_POINTS - 1 else hi - 0.5 * step
    best = golden_section(fn, a, b, tol)
    return best if fn(best) <= vals[i] else grid[i]


def _smallest_int_above(x: float) -> int:
    return math.floor(x) + 1


def minimize_r(k: int, c: SieveConstants = DEFAULT_CONSTANTS,
               tol: float = 1e-6) -> BoundResult:
    """Optimal beta0 and the least admissible integer r for degree ``k``."""
    if k < 2:
        raise DomainError(f"degree must be >= 2, got {k}")
    delta0 = solve_delta0(c)
    _check_explicit_ranges(c, ALPHA0, delta0)

    def obj(b):
        return r_bound(k, b, c)

    beta0 = _argmin(obj, delta0, 1.0, tol)
    r_real = obj(beta0)
    r_int = _smallest_int_above(r_real)
    if beta0 / k > 1.0 / (r_int + 1):
        return BoundResult(k, beta0, r_real, r_int, True)

    # The unconstrained optimum violates beta0/k > 1/(r+1). Try each r upward,
    # minimising over the beta0 values that keep that r feasible.
    for r in range(r_int, 20 * k + 100):
        lo = max(delta0, k / (r + 1))
        if lo >= 1.0:
            break
        b = _argmin(obj, lo, 1.0, tol)
        rr = obj(b)
        if rr < r and b / k > 1.0 / (r + 1):
            return BoundResult(k, b, rr, r, True)
    raise Infeasible(f"no admissible beta0 in ({delta0}, 1) for k={k}")


def asymptotic_constant(c: SieveConstants = DEFAULT_CONSTANTS,
                        via_a1: bool = False) -> float:
    """Coefficient c in r(k) = k + c log k + O(1).

    ``via_a1`` selects the form e^{-gamma} A2 / (2 A1 log 3) instead of the
    reduced e^{-2 gamma} A2 / (4 log 3); both agree since A1 = 2 e^gamma.
    """
    if via_a1:
        return math.exp(-c.gamma) * c.a2 / (2.0 * c.a1 * math.log(3.0))
    return math.exp(-2.0 * c.gamma) * c.a2 / (4.0 * math.log(3.0))


def large_k_profile(k: int, c: SieveConstants = DEFAULT_CONSTANTS) -> float:
    """Residual r(k, 1 - 1/k) - k - c log k, which stays bounded as k grows."""
    if k < 3:
        raise DomainError(f"large-k profile needs k >= 3, got {k}")
    return r_bound(k, 1.0 - 1.0 / k, c) - k - asymptotic_constant(c) * math.log(k)


def bound_table(k_min: int, k_max: int,
                c: SieveConstants = DEFAULT_CONSTANTS) -> list[BoundResult]:
    return [minimize_r(k, c) for k in range(k_min, k_max + 1)]
