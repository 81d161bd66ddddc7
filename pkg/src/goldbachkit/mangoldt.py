"""Sieve-based arithmetic substrate.

Builds von Mangoldt tables Lambda(n) with a linear smallest-prime-factor
sieve, and evaluates the Chebyshev-type sums every other module feeds on:
psi(x), the Riesz means psi_j(x) = (1/j!) sum_{n<=x} Lambda(n)(x-n)^j,
restricted sums over arithmetic progressions, and exact primorials.

Tables are immutable after construction (the value arrays are marked
read-only), so concurrent readers are always safe.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .accum import exact_sum, riesz_integral, weighted_power_sum


@dataclass(frozen=True)
class MangoldtTable:
    """Lambda(n) for 1 <= n <= limit, as float64 logs of primes.

    values[n] = log p when n = p^m for a prime p, else 0.  Index 0 is a
    padding slot and always 0.
    """

    limit: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.values.setflags(write=False)


@dataclass(frozen=True)
class PsiJQuery:
    """Riesz order j >= 0 and evaluation point x >= 1."""

    j: int
    x: float

    def __post_init__(self):
        if self.j < 0:
            raise ValueError(f"Riesz order must be >= 0, got {self.j}")
        if self.x < 1:
            raise ValueError(f"evaluation point must be >= 1, got {self.x}")


@dataclass(frozen=True)
class Primorial:
    """Product of all primes below a cutoff, in factored form.

    Python integers are arbitrary precision, so the value can never wrap
    around; the factored form is kept because phi and the per-prime Mertens
    product need the prime list anyway.
    """

    primes: tuple[int, ...]

    @property
    def value(self) -> int:
        result = 1
        for p in self.primes:
            result *= p
        return result

    @property
    def phi(self) -> int:
        result = 1
        for p in self.primes:
            result *= p - 1
        return result


def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit (ascending), by boolean Eratosthenes sieve."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, math.isqrt(limit) + 1):
        if is_prime[i]:
            is_prime[i * i :: i] = False
    return np.nonzero(is_prime)[0].astype(np.int64)


def build_mangoldt(limit: int) -> MangoldtTable:
    """Sieve Lambda(n) for n <= limit.

    Linear smallest-prime-factor sieve: each composite is crossed exactly
    once, so the prime list is exact; prime powers are then post-marked by
    walking p, p^2, p^3, ... for each prime.  Runs in O(limit).

    Raises ValueError for limit < 2.
    """
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    spf = np.zeros(limit + 1, dtype=np.int64)
    primes: list[int] = []
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i] = i
            primes.append(i)
        for p in primes:
            if p > spf[i] or i * p > limit:
                break
            spf[i * p] = p
    values = np.zeros(limit + 1)
    for p in primes:
        logp = math.log(p)
        q = p
        while q <= limit:
            values[q] = logp
            q *= p
    return MangoldtTable(limit=limit, values=values)


def _check_range(table: MangoldtTable, x: float) -> None:
    if x > table.limit:
        raise ValueError(
            f"argument {x} exceeds sieve limit {table.limit}; rebuild the table"
        )


def chebyshev_psi(table: MangoldtTable, x: float) -> float:
    """psi(x) = sum_{n <= x} Lambda(n), compensated, ascending order."""
    _check_range(table, x)
    m = int(math.floor(x))
    if m < 1:
        return 0.0
    return exact_sum(table.values[1 : m + 1])


def riesz_psi_j(table: MangoldtTable, q: PsiJQuery) -> float:
    """psi_j(x) = (1/j!) sum_{n <= x} Lambda(n) (x-n)^j.

    Computed as a direct weighted sum (never by recursion on j) in the same
    ascending compensated order as chebyshev_psi; for j = 0 each weight is
    exactly 1.0 so the result is bit-for-bit equal to chebyshev_psi.
    """
    _check_range(table, q.x)
    total = weighted_power_sum(table.values, q.x, q.j)
    return total / math.factorial(q.j)


def psi_shift_check(table: MangoldtTable, j: int, x: float) -> tuple[float, float]:
    """Unit-shift increment of psi_j against its x^j growth scale.

    Returns (psi_j(x+1) - psi_j(x), x^j); the ratio of the two is bounded,
    which callers assert at whatever constant they calibrate.
    """
    if j < 1:
        raise ValueError("shift check needs j >= 1")
    _check_range(table, x + 1)
    a = riesz_psi_j(table, PsiJQuery(j, x))
    b = riesz_psi_j(table, PsiJQuery(j, x + 1))
    return b - a, x**j


def psi_integral_check(table: MangoldtTable, j: int, x: float) -> tuple[float, float]:
    """psi_j(x) against the exact integral of psi_{j-1} over [0, x].

    psi_{j-1} is piecewise polynomial with integer breakpoints, so the
    integral is evaluated cell by cell in closed form (a finite sum, no
    quadrature).  The two return values agree up to summation-order noise.
    """
    if j < 1:
        raise ValueError("integral identity needs j >= 1")
    _check_range(table, x)
    direct = riesz_psi_j(table, PsiJQuery(j, x))
    integral = riesz_integral(table.values, j - 1, x)
    return direct, integral


def psi_progression(table: MangoldtTable, x: float, q: int, a: int) -> float:
    """psi(x; q, a) = sum_{n <= x, n == a (mod q)} Lambda(n)."""
    if q < 1:
        raise ValueError(f"modulus must be >= 1, got {q}")
    _check_range(table, x)
    m = int(math.floor(x))
    if m < 1:
        return 0.0
    start = a % q
    if start == 0:
        start = q
    if start > m:
        return 0.0
    return exact_sum(table.values[start : m + 1 : q])


def primorial(y: float) -> Primorial:
    """Product of all primes p < y, exact and factored."""
    if y < 2:
        raise ValueError(f"primorial cutoff must be >= 2, got {y}")
    cutoff = math.ceil(y) - 1 if float(y).is_integer() else math.floor(y)
    ps = primes_up_to(max(cutoff, 0))
    return Primorial(primes=tuple(int(p) for p in ps))


def euler_phi(q) -> int:
    """phi of a factored squarefree integer (Primorial or distinct primes)."""
    if isinstance(q, Primorial):
        return q.phi
    result = 1
    for p in q:
        result *= p - 1
    return result


def phi_of_int(q: int) -> int:
    """phi(q) for a plain integer modulus, by trial-division factoring."""
    if q < 1:
        raise ValueError(f"modulus must be >= 1, got {q}")
    result = q
    m = q
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result
