"""Integer polynomials and their local root densities.

For a polynomial f the two densities are

    nu1(d) = #{a mod d : gcd(a, d) = 1, f(a) = 0 mod d}
    nu2(d) = #{a mod d : a f(a) = 0 mod d}

Both are multiplicative in d, and nu2(p) = nu1(p) + 1 at every prime.
``nu1``/``nu2`` count residues directly; ``nu1_many`` computes nu1 for many
primes at once as deg gcd(f, x^(p-1) - 1) over F_p, which is what makes the
Mertens-type diagnostics feasible up to 10**6 and beyond.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .arith import factorize, primes_upto
from .errors import ConditionFailed, NotSquarefree, PolynomialParseError
from .sieve_functions import EULER_GAMMA

# products a*b with a, b < p must fit in int64
_VECTOR_PRIME_LIMIT = 1 << 31


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial with coefficients in ascending degree order."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [int(a) for a in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))
        if len(c) < 2:
            raise ValueError("polynomial must have degree >= 1")
        if c[-1] <= 0:
            raise ValueError("leading coefficient must be positive")

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        return parse_polynomial(text)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    @property
    def constant(self) -> int:
        return self.coeffs[0]

    def content(self) -> int:
        return math.gcd(*self.coeffs)

    def __call__(self, n: int) -> int:
        return eval_poly(self, n)

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            a = abs(a)
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += sign + body
        return out


def eval_poly(f: IntPolynomial, n: int) -> int:
    """Exact value f(n) by Horner's rule."""
    acc = 0
    for a in reversed(f.coeffs):
        acc = acc * n + a
    return acc


_COEFF_LIST = re.compile(r"\s*[+-]?\d+\s*(,\s*[+-]?\d+\s*)+")
_TERM = re.compile(r"(\d+)(?:\*(x)(?:\^(\d+))?)?|(x)(?:\^(\d+))?")


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse ``"2,0,0,1"`` (ascending coefficients) or ``"x^3+2"``-style text.

    The expression grammar allows integer coefficients, the single variable
    ``x`` and the operators ``+ - * ^``, e.g. ``"2*x^4-3*x+7"``.
    """
    if _COEFF_LIST.fullmatch(text):
        coeffs = [int(t) for t in text.split(",")]
    else:
        s = re.sub(r"\s+", "", text)
        if not s:
            raise PolynomialParseError("empty polynomial")
        terms: dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(s):
            sign = 1
            if s[pos] in "+-":
                sign = -1 if s[pos] == "-" else 1
                pos += 1
            elif not first:
                raise PolynomialParseError(f"expected '+' or '-' at position {pos} in {text!r}")
            m = _TERM.match(s, pos)
            if m is None or m.end() == pos:
                raise PolynomialParseError(f"bad term at position {pos} in {text!r}")
            num, x1, e1, x2, e2 = m.groups()
            if num is not None:
                coef = int(num)
                deg = 0 if x1 is None else int(e1 or 1)
            else:
                coef = 1
                deg = int(e2 or 1)
            terms[deg] = terms.get(deg, 0) + sign * coef
            pos = m.end()
            first = False
        coeffs = [0] * (max(terms) + 1)
        for d, a in terms.items():
            coeffs[d] = a
    try:
        return IntPolynomial(tuple(coeffs))
    except ValueError as exc:
        raise PolynomialParseError(f"{text!r}: {exc}") from None


def _values_mod(f: IntPolynomial, a: np.ndarray, p: int) -> np.ndarray:
    acc = np.zeros_like(a)
    for c in reversed(f.coeffs):
        acc = (acc * a + (c % p)) % p
    return acc


def nu1(f: IntPolynomial, p: int) -> int:
    """Number of a in 1..p-1 with f(a) = 0 mod p, by enumeration."""
    if p < _VECTOR_PRIME_LIMIT:
        a = np.arange(1, p, dtype=np.int64)
        return int(np.count_nonzero(_values_mod(f, a, p) == 0))
    return sum(1 for a in range(1, p) if eval_poly(f, a) % p == 0)


def nu2(f: IntPolynomial, p: int) -> int:
    """Number of a in 0..p-1 with a f(a) = 0 mod p, by enumeration."""
    if p < _VECTOR_PRIME_LIMIT:
        a = np.arange(p, dtype=np.int64)
        return int(np.count_nonzero(a * _values_mod(f, a, p) % p == 0))
    return sum(1 for a in range(p) if a * eval_poly(f, a) % p == 0)


def nu_squarefree(f: IntPolynomial, d: int, which: int = 1) -> int:
    """nu1(d) or nu2(d) for squarefree d, via multiplicativity."""
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    local = nu1 if which == 1 else nu2
    out = 1
    for p, e in factorize(d).factors:
        if e > 1:
            raise NotSquarefree(f"{d} is divisible by {p}^2")
        out *= local(f, p)
    return out


# --- root counting over F_p -------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: list[int], g: list[int], p: int) -> list[int]:
    """a mod g over F_p, with g monic."""
    a = a[:]
    k = len(g) - 1
    for d in range(len(a) - 1, k - 1, -1):
        t = a[d]
        if t:
            for j in range(k + 1):
                a[d - k + j] = (a[d - k + j] - t * g[j]) % p
    return _trim(a[:k])


def _polygcd_degree(a: list[int], b: list[int], p: int) -> int:
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        inv = pow(b[-1], -1, p)
        b = [c * inv % p for c in b]
        a, b = b, _polymod(a, b, p)
    return len(a) - 1


def _mulmod(a: list[int], b: list[int], g: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    c = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                c[i + j] = (c[i + j] + ai * bj) % p
    return _polymod(c, g, p)


def count_nonzero_roots(f: IntPolynomial, p: int) -> int:
    """nu1(p) as deg gcd(f mod p, x^(p-1) - 1); works for any prime size."""
    fp = _trim([c % p for c in f.coeffs])
    if not fp:
        return p - 1
    if len(fp) == 1:
        return 0
    inv = pow(fp[-1], -1, p)
    g = [c * inv % p for c in fp]
    result, base, e = [1], _polymod([0, 1], g, p), p - 1
    while e:
        if e & 1:
            result = _mulmod(result, base, g, p)
        base = _mulmod(base, base, g, p)
        e >>= 1
    h = result + [0] * (len(g) - 1 - len(result))
    h[0] = (h[0] - 1) % p
    return _polygcd_degree(g, h, p)


def _vec_mulmod(a, b, g, P):
    k = g.shape[1]
    m = a.shape[0]
    c = np.zeros((m, 2 * k - 1), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            c[:, i + j] = (c[:, i + j] + a[:, i] * b[:, j] % P) % P
    for d in range(2 * k - 2, k - 1, -1):
        t = c[:, d]
        for j in range(k):
            c[:, d - k + j] = (c[:, d - k + j] - t * g[:, j] % P) % P
    return c[:, :k]


def nu1_many(f: IntPolynomial, primes) -> np.ndarray:
    """nu1(p) for every p in ``primes``, vectorised across primes."""
    primes = np.asarray(primes, dtype=np.int64)
    out = np.zeros(len(primes), dtype=np.int64)
    if len(primes) == 0:
        return out
    lead = f.leading
    fast = (primes < _VECTOR_PRIME_LIMIT) & (np.array([lead % int(p) for p in primes]) != 0)
    for idx in np.flatnonzero(~fast):
        out[idx] = count_nonzero_roots(f, int(primes[idx]))
    idx = np.flatnonzero(fast)
    if len(idx) == 0:
        return out
    P = primes[idx]
    plist = P.tolist()
    k = f.degree
    inv = np.array([pow(lead % p, -1, p) for p in plist], dtype=np.int64)
    g = np.empty((len(P), k), dtype=np.int64)
    for i in range(k):
        ci = np.array([f.coeffs[i] % p for p in plist], dtype=np.int64)
        g[:, i] = ci * inv % P
    result = np.zeros((len(P), k), dtype=np.int64)
    result[:, 0] = 1
    base = np.zeros((len(P), k), dtype=np.int64)
    if k == 1:
        base[:, 0] = (-g[:, 0]) % P
    else:
        base[:, 1] = 1
    e = P - 1
    for bit in range(int(e.max()).bit_length()):
        on = ((e >> bit) & 1).astype(bool)
        if on.any():
            prod = _vec_mulmod(result, base, g, P)
            result = np.where(on[:, None], prod, result)
        base = _vec_mulmod(base, base, g, P)
    result[:, 0] = (result[:, 0] - 1) % P
    glist = g.tolist()
    for j, (p, gi, hi) in enumerate(zip(plist, glist, result.tolist())):
        out[idx[j]] = _polygcd_degree(gi + [1], hi, p)
    return out


# --- local condition --------------------------------------------------------

def local_condition_failure(f: IntPolynomial) -> int | None:
    """The least prime p with nu1(p) = p - 1, or None if there is none.

    nu1(p) <= deg f whenever p does not divide every coefficient, so only
    primes p <= deg f + 1 and prime divisors of the content need checking.
    """
    candidates = set(primes_upto(f.degree + 1).tolist())
    candidates.update(p for p, _ in factorize(f.content()).factors)
    for p in sorted(candidates):
        if count_nonzero_roots(f, p) >= p - 1:
            return p
    return None


def check_local_condition(f: IntPolynomial) -> bool:
    return local_condition_failure(f) is None


def rational_root_screen(f: IntPolynomial, max_divisor_bits: int = 64) -> bool:
    """True when f visibly factors: a rational root or a nontrivial content.

    A False answer does not prove irreducibility.
    """
    if f.content() > 1:
        return True
    if f.degree == 1:
        return False
    if f.constant == 0:
        return True
    a0, ak = abs(f.constant), f.leading
    if a0.bit_length() > max_divisor_bits or ak.bit_length() > max_divisor_bits:
        return False
    num = _divisors(a0)
    den = _divisors(ak)
    for q in den:
        for pnum in num:
            if math.gcd(pnum, q) != 1:
                continue
            for s in (pnum, -pnum):
                # q^k f(s/q) as an integer
                acc = 0
                for i, c in enumerate(f.coeffs):
                    acc += c * s ** i * q ** (f.degree - i)
                if acc == 0:
                    return True
    return False


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p ** j for d in divs for j in range(e + 1)]
    return divs


# --- Mertens-type diagnostics ----------------------------------------------

@dataclass(frozen=True)
class MertensDiagnostics:
    """Drift of the four density sums/products at cutoff x.

    d1 = sum nu1(p) log p / (p-1) - log x
    d2 = sum nu2(p) log p / p - 2 log x
    p1 = log x * prod (1 - nu1(p)/(p-1))
    p2 = (log x)^2 * prod (1 - nu2(p)/p)
    """

    x: int
    d1: float
    d2: float
    p1: float
    p2: float

    @property
    def product_ratio(self) -> float:
        """p2 / p1; tends to e^-gamma."""
        return self.p2 / self.p1

    def as_dict(self) -> dict:
        return {"x": self.x, "D1": self.d1, "D2": self.d2, "P1": self.p1, "P2": self.p2}


def mertens_diagnostics(f: IntPolynomial, x: int) -> MertensDiagnostics:
    if x < 2:
        raise ValueError(f"x must be >= 2, got {x}")
    ps = primes_upto(x)
    v1 = nu1_many(f, ps)
    pf = ps.astype(float)
    logp = np.log(pf)
    bad = np.flatnonzero(v1 >= ps - 1)
    if len(bad):
        p = int(ps[bad[0]])
        raise ConditionFailed(f"nu1({p}) = {p - 1}: fixed prime divisor {p}", prime=p)
    v2 = v1 + 1
    logx = math.log(x)
    d1 = math.fsum((v1 * logp / (pf - 1.0)).tolist()) - logx
    d2 = math.fsum((v2 * logp / pf).tolist()) - 2.0 * logx
    log_p1 = math.fsum(np.log1p(-v1 / (pf - 1.0)).tolist())
    log_p2 = math.fsum(np.log1p(-v2 / pf).tolist())
    return MertensDiagnostics(
        x=int(x),
        d1=d1,
        d2=d2,
        p1=logx * math.exp(log_p1),
        p2=logx * logx * math.exp(log_p2),
    )


MERTENS_RATIO_LIMIT = math.exp(-EULER_GAMMA)
