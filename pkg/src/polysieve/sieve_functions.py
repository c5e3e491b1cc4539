"""Explicit beta-sieve functions on the ranges where they are elementary.

Only three closed forms are needed by the bound computation:

    f_1(s) = A_1 log(s - 1) / s    for 2 <= s <= 4
    F_1(s) = A_1 / s               for 0 < s <= 3
    F_2(s) = A_2 / s**2            for 0 < s <= beta_2 + 1

Outside those ranges the functions are defined through delay-differential
equations, which we do not solve. Queries there raise ``RangeUnavailable``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from .errors import RangeUnavailable

EULER_GAMMA = 0.57721566490153286061


@dataclass(frozen=True)
class SieveConstants:
    """Analytic constants of the 1- and 2-dimensional beta-sieve.

    ``a2`` and ``beta2`` are the truncated published values; pass others to
    probe sensitivity. ``a1`` is always derived as ``2 * exp(gamma)``.
    """

    gamma: float = EULER_GAMMA
    a2: float = 43.496
    beta2: float = 4.8333
    a1: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "a1", 2.0 * math.exp(self.gamma))
        if self.a2 <= 0 or self.beta2 <= 0:
            raise ValueError("a2 and beta2 must be positive")

    def with_(self, **changes) -> "SieveConstants":
        return replace(self, **changes)


DEFAULT_CONSTANTS = SieveConstants()


def lower_f1(c: SieveConstants, s: float) -> float:
    if not 2.0 <= s <= 4.0:
        raise RangeUnavailable(f"f_1 explicit form needs 2 <= s <= 4, got s={s!r}")
    return c.a1 * math.log(s - 1.0) / s


def upper_F1(c: SieveConstants, s: float) -> float:
    if not 0.0 < s <= 3.0:
        raise RangeUnavailable(f"F_1 explicit form needs 0 < s <= 3, got s={s!r}")
    return c.a1 / s


def upper_F2(c: SieveConstants, s: float) -> float:
    if not 0.0 < s <= c.beta2 + 1.0:
        raise RangeUnavailable(
            f"F_2 explicit form needs 0 < s <= {c.beta2 + 1.0}, got s={s!r}")
    return c.a2 / (s * s)
