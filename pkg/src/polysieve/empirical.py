"""Empirical counterparts of the sieve quantities on a dyadic range.

Everything is measured on A = {f(p) : x < p <= 2x}, the set the weighted
sieve works with. The theorem counts p <= x instead; on a dyadic block the
two differ only by a constant factor.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .arith import MAX_FACTOR_BITS, FactorizationRecord, factorize, primes_in, totient
from .errors import ParameterError, RangeTooLarge
from .polynomial import IntPolynomial, eval_poly, nu_squarefree


def _factor_all(values: list[int], workers: int) -> list[FactorizationRecord]:
    if workers <= 1 or len(values) < 2 * workers:
        return [factorize(v) for v in values]
    chunk = max(1, len(values) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(factorize, values, chunksize=chunk))


@dataclass(frozen=True)
class RemainderStats:
    d_max: int
    residuals: dict[int, float] = field(repr=False)

    @property
    def count(self) -> int:
        return len(self.residuals)

    @property
    def total(self) -> float:
        return math.fsum(abs(r) for r in self.residuals.values())

    @property
    def mean(self) -> float:
        return self.total / self.count

    @property
    def max(self) -> float:
        return max(abs(r) for r in self.residuals.values())


class DyadicSample:
    """The primes in (x, 2x], the values f(p) and their factorizations.

    Factorizations are computed once and shared by every statistic.
    """

    def __init__(self, f: IntPolynomial, x: int, workers: int = 1):
        if x < 2:
            raise ValueError(f"x must be >= 2, got {x}")
        top = eval_poly(f, 2 * x)
        if top.bit_length() > MAX_FACTOR_BITS:
            raise RangeTooLarge(
                f"f(2x) has {top.bit_length()} bits; factorization is capped at {MAX_FACTOR_BITS}")
        self.f = f
        self.x = int(x)
        self.workers = workers

    @cached_property
    def primes(self) -> list[int]:
        return primes_in(self.x, 2 * self.x).tolist()

    @cached_property
    def values(self) -> list[int]:
        return [eval_poly(self.f, p) for p in self.primes]

    @cached_property
    def factorizations(self) -> list[FactorizationRecord]:
        return _factor_all(self.values, self.workers)

    @property
    def X(self) -> int:
        return len(self.primes)

    @cached_property
    def N(self) -> int:
        return max(self.values)

    def counts(self, r_max: int) -> dict[int, int]:
        omegas = np.array([rec.omega_big for rec in self.factorizations], dtype=np.int64)
        return {r: int(np.count_nonzero(omegas <= r)) for r in range(r_max + 1)}

    def sieve_limits(self, alpha: float, beta: float) -> tuple[float, float]:
        """z = N^alpha and y = N^beta for this block's actual N."""
        log_n = math.log(self.N)
        return math.exp(alpha * log_n), math.exp(beta * log_n)

    def weighted_sum(self, alpha: float, beta: float, r: int) -> float:
        k = self.f.degree
        eta = r + 1 - 1.0 / beta
        if not 0.0 < alpha < beta:
            raise ParameterError(f"need 0 < alpha < beta, got ({alpha}, {beta})")
        if beta >= 1.0 / k:
            raise ParameterError(f"beta={beta} must be below 1/deg f = {1.0 / k}")
        if eta <= 0:
            raise ParameterError(f"eta = r + 1 - 1/beta = {eta} <= 0")
        z, y = self.sieve_limits(alpha, beta)
        log_y = math.log(y)
        terms = []
        for rec in self.factorizations:
            ps = rec.primes()
            if ps and ps[0] < z:
                continue
            inner = math.fsum(1.0 - math.log(q) / log_y for q in ps if z <= q < y)
            terms.append(1.0 - inner / eta)
        return math.fsum(terms)

    def remainder_stats(self, d_max: int) -> RemainderStats:
        if d_max < 1:
            raise ValueError(f"d_max must be >= 1, got {d_max}")
        X = self.X
        residuals = {}
        for d in range(1, d_max + 1):
            rec = factorize(d)
            if any(e > 1 for _, e in rec.factors):
                continue
            hits = sum(1 for v in self.values if v % d == 0)
            nu = nu_squarefree(self.f, d, 1)
            residuals[d] = hits - X * nu / totient(d)
        return RemainderStats(d_max, residuals)

    def square_divisor_count(self, z: float, y: float) -> int:
        if not 2 <= z < y:
            raise ValueError(f"need 2 <= z < y, got ({z}, {y})")
        return sum(
            1 for rec in self.factorizations
            if any(z <= p < y and e >= 2 for p, e in rec.factors)
        )


def count_almost_primes(f: IntPolynomial, x: int, r_max: int,
                        workers: int = 1) -> dict[int, int]:
    """r -> #{x < p <= 2x : Omega(f(p)) <= r} for r = 0..r_max."""
    return DyadicSample(f, x, workers).counts(r_max)


def weighted_sum(f: IntPolynomial, x: int, alpha: float, beta: float, r: int,
                 workers: int = 1) -> float:
    """Weighted sieve sum over the elements of A free of prime factors below z.

    Each surviving n = f(p) contributes 1 - (1/eta) sum (1 - log q / log y),
    the sum running over distinct primes q | n with z <= q < y, and
    eta = r + 1 - 1/beta.
    """
    return DyadicSample(f, x, workers).weighted_sum(alpha, beta, r)


def remainder_stats(f: IntPolynomial, x: int, d_max: int) -> RemainderStats:
    """R_d = #A_d - X nu1(d) / phi(d) for every squarefree d <= d_max."""
    return DyadicSample(f, x).remainder_stats(d_max)


def square_divisor_count(f: IntPolynomial, x: int, z: float, y: float) -> int:
    """Number of p in (x, 2x] with q^2 | f(p) for some prime q in [z, y)."""
    return DyadicSample(f, x).square_divisor_count(z, y)


@dataclass(frozen=True)
class EmpiricalReport:
    x: int
    X: int
    N: int
    counts: dict[int, int]
    S: float
    remainder_sum: float
    remainder_mean: float
    remainder_max: float
    alpha: float
    beta: float
    r: int

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "X": self.X,
            "N": str(self.N),
            "counts": {str(r): c for r, c in self.counts.items()},
            "S": self.S,
            "remainder": {
                "sum": self.remainder_sum,
                "mean": self.remainder_mean,
                "max": self.remainder_max,
            },
            "params": {"alpha": self.alpha, "beta": self.beta, "r": self.r},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def counts_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["r", "count"])
        for r, c in self.counts.items():
            w.writerow([r, c])
        return buf.getvalue()


def empirical_report(f: IntPolynomial, x: int, r_max: int, d_max: int,
                     alpha: float, beta: float, r: int,
                     workers: int = 1) -> EmpiricalReport:
    sample = DyadicSample(f, x, workers)
    rem = sample.remainder_stats(d_max)
    return EmpiricalReport(
        x=sample.x,
        X=sample.X,
        N=sample.N,
        counts=sample.counts(r_max),
        S=sample.weighted_sum(alpha, beta, r),
        remainder_sum=rem.total,
        remainder_mean=rem.mean,
        remainder_max=rem.max,
        alpha=alpha,
        beta=beta,
        r=r,
    )
