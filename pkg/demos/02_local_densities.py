"""Local root densities nu1, nu2 and the Mertens-type sums they feed.

Run: python demos/02_local_densities.py
"""
import math

from polysieve import (
    check_local_condition,
    local_condition_failure,
    mertens_diagnostics,
    nu1,
    nu2,
    parse_polynomial,
    primes_upto,
)

f = parse_polynomial("x^3+2")
print(f"f = {f}")

# nu2(p) always exceeds nu1(p) by one: the extra residue is a = 0.
print("\n  p  nu1  nu2")
for p in primes_upto(40).tolist():
    print(f"{p:3d}  {nu1(f, p):3d}  {nu2(f, p):3d}")

# A fixed prime divisor makes every sieve product vanish.
for text in ("x^3+2", "x^2+x+2", "x^2+x+1", "2*x^2+4"):
    g = parse_polynomial(text)
    bad = local_condition_failure(g)
    verdict = "ok" if check_local_condition(g) else f"fails at p = {bad}"
    print(f"local condition for {text:10s}: {verdict}")

# D1, D2 should stay bounded while P1 -> c_f and P2 -> e^-gamma c_f.
print("\n       x        D1         D2         P1         P2     P2/P1")
for x in (10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6):
    d = mertens_diagnostics(f, x)
    print(f"{x:8d}  {d.d1:9.5f}  {d.d2:9.5f}  {d.p1:9.6f}  {d.p2:9.6f}  {d.product_ratio:.6f}")
print(f"e^-gamma = {math.exp(-0.5772156649015329):.6f}")
