"""Prime enumeration, primality testing and integer factorization.

Factorization follows the usual desk-scale recipe: trial division by the
primes below 10**4, Miller-Rabin, then Pollard rho with Brent's cycle
detection. Every random choice is seeded from the number being factored,
so results never depend on call order or on the worker that ran them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .errors import RangeTooLarge, Unfactored

TRIAL_LIMIT = 10_000
MAX_FACTOR_BITS = 128
MAX_SIEVE_WIDTH = 10**8
MAX_SIEVE_HI = 10**16
SEGMENT = 1 << 20

# Deterministic for n < 3.3e24, which covers everything below 2**64.
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_ROUNDS_BIG = 40


def simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


SMALL_PRIMES = simple_sieve(TRIAL_LIMIT).tolist()
_SMALL_SET = frozenset(SMALL_PRIMES)
# products of consecutive small primes, to skip blocks with one gcd
_BLOCK = 64
_BLOCKS = [
    (SMALL_PRIMES[i:i + _BLOCK], math.prod(SMALL_PRIMES[i:i + _BLOCK]))
    for i in range(0, len(SMALL_PRIMES), _BLOCK)
]


def primes_in(lo: int, hi: int) -> np.ndarray:
    """Primes p with lo < p <= hi, ascending, by a segmented sieve.

    >>> primes_in(10, 20).tolist()
    [11, 13, 17, 19]
    """
    lo, hi = int(lo), int(hi)
    if lo < 0 or hi < lo:
        raise ValueError(f"need 0 <= lo <= hi, got ({lo}, {hi})")
    if hi - lo > MAX_SIEVE_WIDTH or hi > MAX_SIEVE_HI:
        raise RangeTooLarge(f"sieve range ({lo}, {hi}] exceeds desk-scale limits")
    base = simple_sieve(math.isqrt(hi))
    out = []
    start = lo + 1
    while start <= hi:
        end = min(start + SEGMENT, hi + 1)  # exclusive
        mark = np.ones(end - start, dtype=bool)
        for p in base.tolist():
            first = max(p * p, -(-start // p) * p)
            if first >= end:
                if p * p >= end:
                    break
                continue
            mark[first - start::p] = False
        if start <= 1:
            mark[:2 - start] = False
        out.append(np.flatnonzero(mark).astype(np.int64) + start)
        start = end
    if not out:
        return np.array([], dtype=np.int64)
    return np.concatenate(out)


def primes_upto(n: int) -> np.ndarray:
    return primes_in(0, n)


def _mr_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 2**64, 40 seeded rounds above."""
    if n < 2:
        return False
    if n < TRIAL_LIMIT:
        return n in _SMALL_SET
    for p in SMALL_PRIMES[:25]:
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        return all(_mr_round(n, d, s, a) for a in _MR_BASES_64)
    rng = random.Random(n)
    bases = list(_MR_BASES_64) + [rng.randrange(2, n - 1) for _ in range(_MR_ROUNDS_BIG)]
    return all(_mr_round(n, d, s, a) for a in bases)


def pollard_brent(n: int, budget: int = 2_000_000) -> int:
    """A nontrivial factor of the odd composite ``n``.

    Raises Unfactored once ``budget`` iterations have been spent across all
    restarts.
    """
    rng = random.Random(n)
    spent = 0
    m = 128
    while spent < budget:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            spent += r
            r *= 2
            if spent >= budget:
                break
        if g == n:
            # the batched gcd overshot; step back one at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    raise Unfactored(f"Pollard rho budget of {budget} exhausted for n={n}")


def _iroot(n: int, e: int) -> int:
    r = int(round(n ** (1.0 / e)))
    while r ** e > n:
        r -= 1
    while (r + 1) ** e <= n:
        r += 1
    return r


def _perfect_power(n: int) -> tuple[int, int] | None:
    # remaining cofactors have no prime factor below TRIAL_LIMIT, so e stays small
    for e in range(2, n.bit_length() // 13 + 1):
        r = _iroot(n, e)
        if r ** e == n:
            return r, e
    return None


@dataclass(frozen=True)
class FactorizationRecord:
    n: int
    factors: tuple[tuple[int, int], ...]
    omega_big: int

    def in_P(self, r: int) -> bool:
        """Whether n has at most r prime factors counted with multiplicity."""
        return self.omega_big <= r

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def multiplicity(self, p: int) -> int:
        return dict(self.factors).get(p, 0)


def _split(n: int, out: dict, budget: int) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    pp = _perfect_power(n)
    if pp is not None:
        root, e = pp
        sub: dict = {}
        _split(root, sub, budget)
        for p, m in sub.items():
            out[p] = out.get(p, 0) + m * e
        return
    d = pollard_brent(n, budget)
    _split(d, out, budget)
    _split(n // d, out, budget)


def factorize(n: int, budget: int = 2_000_000) -> FactorizationRecord:
    """Complete factorization of 1 <= n < 2**128."""
    n = int(n)
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    if n.bit_length() > MAX_FACTOR_BITS:
        raise RangeTooLarge(f"n has {n.bit_length()} bits; limit is {MAX_FACTOR_BITS}")
    out: dict = {}
    m = n
    for block, prod in _BLOCKS:
        if m == 1 or block[0] * block[0] > m:
            break
        if math.gcd(m, prod) == 1:
            continue
        for p in block:
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                out[p] = e
    if m > 1:
        if m < SMALL_PRIMES[-1] ** 2:
            # every factor below 10**4 is gone, so what remains is prime
            out[m] = out.get(m, 0) + 1
        else:
            _split(m, out, budget)
    factors = tuple(sorted(out.items()))
    return FactorizationRecord(n, factors, sum(e for _, e in factors))


def totient(d: int) -> int:
    result = d
    for p, _ in factorize(d).factors:
        result -= result // p
    return result


def is_squarefree(d: int) -> bool:
    return all(e == 1 for _, e in factorize(d).factors)
