import json
import math

import pytest
import sympy

from polysieve import (
    DyadicSample,
    ParameterError,
    RangeTooLarge,
    count_almost_primes,
    empirical_report,
    minimize_r,
    parse_polynomial,
    remainder_stats,
    square_divisor_count,
    weighted_sum,
)


def oracle_omegas(coeffs, x):
    ps = list(sympy.primerange(x + 1, 2 * x + 1))
    vals = [sum(c * p ** i for i, c in enumerate(coeffs)) for p in ps]
    return ps, vals, [sympy.factorint(v) for v in vals]


def oracle_weighted(coeffs, x, alpha, beta, r):
    ps, vals, facs = oracle_omegas(coeffs, x)
    N = max(vals)
    z, y = N ** alpha, N ** beta
    eta = r + 1 - 1 / beta
    total = 0.0
    for fac in facs:
        if any(q < z for q in fac):
            continue
        total += 1 - sum(1 - math.log(q) / math.log(y) for q in fac if z <= q < y) / eta
    return total


def test_counts_x100(cubic):
    counts = count_almost_primes(cubic, 100, 5)
    # frozen from sympy.factorint over the 21 primes in (100, 200]
    assert counts == {0: 0, 1: 2, 2: 7, 3: 19, 4: 20, 5: 21}
    _, _, facs = oracle_omegas(cubic.coeffs, 100)
    assert counts[1] == sum(1 for f in facs if sum(f.values()) <= 1)


def test_counts_properties(cubic):
    s = DyadicSample(cubic, 3000)
    counts = s.counts(12)
    assert counts[0] == 0
    vals = list(counts.values())
    assert all(a <= b for a, b in zip(vals, vals[1:]))
    assert vals[-1] <= s.X
    assert s.X == len(list(sympy.primerange(3001, 6001)))
    assert s.N == max(p ** 3 + 2 for p in sympy.primerange(3001, 6001))


def test_workers_deterministic(cubic):
    a = DyadicSample(cubic, 2000, workers=1)
    b = DyadicSample(cubic, 2000, workers=3)
    assert a.factorizations == b.factorizations
    r1 = empirical_report(cubic, 2000, 8, 30, 1 / 24, 0.2, 6, workers=1)
    r2 = empirical_report(cubic, 2000, 8, 30, 1 / 24, 0.2, 6, workers=2)
    assert r1.to_json() == r2.to_json()


def test_weighted_sum_matches_oracle(cubic):
    res = minimize_r(3)
    alpha, beta = 0.125 / 3, res.beta0_opt / 3
    got = weighted_sum(cubic, 2000, alpha, beta, res.r_int)
    assert got == pytest.approx(oracle_weighted(cubic.coeffs, 2000, alpha, beta, res.r_int), abs=1e-9)
    assert got > 0


def test_weights_at_most_one(cubic):
    s = DyadicSample(cubic, 1500)
    z, y = s.sieve_limits(0.04, 0.2)
    eta = 6 + 1 - 1 / 0.2
    for rec in s.factorizations:
        ps = rec.primes()
        if ps[0] < z:
            continue
        w = 1 - sum(1 - math.log(q) / math.log(y) for q in ps if z <= q < y) / eta
        assert w <= 1
        if not any(z <= q < y for q in ps):
            assert w == 1
    assert s.weighted_sum(0.04, 0.2, 6) <= s.counts(100)[100]


@pytest.mark.parametrize("alpha,beta,r", [
    (0.05, 0.04, 6),   # alpha >= beta
    (0.04, 0.34, 6),   # beta >= 1/k
    (0.04, 0.1, 8),    # eta = 9 - 10 <= 0
])
def test_weighted_sum_parameter_errors(cubic, alpha, beta, r):
    with pytest.raises(ParameterError):
        weighted_sum(cubic, 500, alpha, beta, r)


def test_remainder_stats(cubic):
    x = 2000
    st = remainder_stats(cubic, x, 60)
    assert st.residuals[1] == 0.0
    ps = list(sympy.primerange(x + 1, 2 * x + 1))
    X = len(ps)
    for d, rd in st.residuals.items():
        hits = sum(1 for p in ps if (p ** 3 + 2) % d == 0)
        nu = sum(1 for a in range(d) if math.gcd(a, d) == 1 and (a ** 3 + 2) % d == 0)
        assert rd == pytest.approx(hits - X * nu / sympy.totient(d), abs=1e-9)
    assert 4 not in st.residuals and 30 in st.residuals
    assert st.mean == pytest.approx(st.total / st.count)
    assert st.max == max(abs(v) for v in st.residuals.values())


def test_remainder_nu_zero_prime():
    # x^2+1 has no roots mod 3, so #A_3 must be 0
    f = parse_polynomial("x^2+1")
    st = remainder_stats(f, 1000, 3)
    assert st.residuals[3] == 0


def test_square_divisor_count(cubic):
    x = 3000
    got = square_divisor_count(cubic, x, 10, 100)
    qs = list(sympy.primerange(10, 100))
    brute = sum(1 for p in sympy.primerange(x + 1, 2 * x + 1)
                if any((p ** 3 + 2) % (q * q) == 0 for q in qs))
    assert got == brute
    assert square_divisor_count(cubic, x, 24, 29) == 0  # no primes in [24, 29)
    assert got <= DyadicSample(cubic, x).X


def test_value_bound(cubic):
    with pytest.raises(RangeTooLarge):
        DyadicSample(parse_polynomial("x^9+x+1"), 10 ** 5)


def test_report_serialisation(cubic):
    rep = empirical_report(cubic, 500, 6, 20, 1 / 24, 0.2, 6)
    data = json.loads(rep.to_json())
    assert set(data) >= {"x", "X", "N", "counts", "S", "remainder"}
    assert int(data["N"]) == rep.N
    assert data["counts"] == {str(k): v for k, v in rep.counts.items()}
    assert set(data["remainder"]) == {"sum", "mean", "max"}
    lines = rep.counts_csv().splitlines()
    assert lines[0] == "r,count" and len(lines) == 8
