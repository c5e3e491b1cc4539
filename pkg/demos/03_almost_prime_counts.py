"""Almost-prime values f(p) on a dyadic block, the weighted sum, remainders.

Run: python demos/03_almost_prime_counts.py
"""
import math

from polysieve import DyadicSample, minimize_r, parse_polynomial

f = parse_polynomial("x^3+2")
k = f.degree
x = 20_000
sample = DyadicSample(f, x)
print(f"f = {f}, primes in ({x}, {2 * x}]: X = {sample.X}, N = {sample.N}")

# How many f(p) have at most r prime factors?
counts = sample.counts(10)
scale = x / math.log(x) ** 2
print("\n r  count  count/(x/log^2 x)")
for r, n in counts.items():
    print(f"{r:2d}  {n:5d}  {n / scale:8.3f}")

# The weighted sum with the optimiser's parameters (alpha = alpha0/k, beta = beta0/k).
res = minimize_r(k)
alpha, beta = 0.125 / k, res.beta0_opt / k
z, y = sample.sieve_limits(alpha, beta)
S = sample.weighted_sum(alpha, beta, res.r_int)
print(f"\nr = {res.r_int}, z = {z:.2f}, y = {y:.2f}, eta = {res.r_int + 1 - 1 / beta:.4f}")
print(f"S = {S:.4f}  (a positive S forces elements with at most r = {res.r_int} factors)")
print(f"square divisors from [z, y): {sample.square_divisor_count(max(z, 2), y)}")

# R_d = #A_d - X nu1(d)/phi(d): small on average.
rem = sample.remainder_stats(200)
worst = sorted(rem.residuals.items(), key=lambda t: -abs(t[1]))[:5]
print(f"\nsquarefree d <= 200: {rem.count}, sum |R_d| = {rem.total:.3f}, "
      f"mean = {rem.mean:.4f}, max = {rem.max:.4f}")
print("largest |R_d|:", ", ".join(f"d={d}: {v:+.3f}" for d, v in worst))
