"""Weighted Goldbach representation counts and their averages.

G_k(n) = sum over ordered k-tuples (n_1, ..., n_k) of positive integers
with n_1 + ... + n_k = n of Lambda(n_1) ... Lambda(n_k).  Two independent
construction routes are kept: an exact direct convolution (the oracle) and
an FFT route padded far enough that cyclic wraparound cannot occur.  On
top of the tables: prefix sums S_k(X), the part-capped variant with
coefficients Lambda - 1, Riesz means, and the singular series.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .accum import exact_sum, prefix_increment, running_prefix
from .mangoldt import MangoldtTable, primes_up_to

# Direct convolutions are O(k N^2); beyond this cap callers must opt in.
DIRECT_ORACLE_CAP = 8192

# The FFT path allocates the padded transform; refuse absurd sizes rather
# than swapping the machine to death.
_MAX_FFT_LEN = 1 << 27

DEFAULT_PRIME_CUTOFF = 1e5


@dataclass(frozen=True)
class GoldbachTable:
    """G_k(n) for 0 <= n <= limit; entries below n = k are identically 0."""

    k: int
    limit: int
    values: np.ndarray = field(repr=False)
    method: str = "direct"

    def __post_init__(self):
        self.values.setflags(write=False)


@dataclass(frozen=True)
class PrefixSums:
    """S_k(X) = sum_{n <= X} G_k(n) as a compensated running sum.

    ``sums`` is the float64 view hi + lo; the hi/lo split is retained so
    that increment(X) can reproduce G_k(X) without cancellation even when
    S_k(X) is ten orders of magnitude larger.
    """

    k: int
    limit: int
    sums: np.ndarray = field(repr=False)
    hi: np.ndarray = field(repr=False)
    lo: np.ndarray = field(repr=False)

    def increment(self, x: int) -> float:
        """Compensated S_k(x) - S_k(x-1)."""
        return prefix_increment(self.hi, self.lo, x)


@dataclass(frozen=True)
class SingularSeriesQuery:
    """Parameters for the local-density Euler product of G_k(n)."""

    k: int
    n: int
    prime_cutoff: float = DEFAULT_PRIME_CUTOFF

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"need k >= 2, got {self.k}")
        if self.n < 1:
            raise ValueError(f"need n >= 1, got {self.n}")
        if self.prime_cutoff < 2:
            raise ValueError(f"need prime cutoff >= 2, got {self.prime_cutoff}")


def _check_build_args(table: MangoldtTable, k: int, limit: int) -> None:
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if limit > table.limit:
        raise ValueError(
            f"table limit {limit} exceeds sieve limit {table.limit}"
        )
    if limit < 1:
        raise ValueError(f"need a positive limit, got {limit}")


def gk_direct(table: MangoldtTable, k: int, limit: int,
              cap: int = DIRECT_ORACLE_CAP) -> GoldbachTable:
    """G_k by k-1 successive exact direct convolutions (the oracle route).

    Intermediate stages are truncated at ``limit``: parts are >= 1, so
    partial sums beyond the limit can never fall back into range.
    """
    _check_build_args(table, k, limit)
    if limit > cap:
        raise ValueError(
            f"direct oracle capped at {cap} (O(k N^2)); requested {limit}"
        )
    base = table.values[: limit + 1]
    out = base.copy()
    for _ in range(k - 1):
        out = np.convolve(out, base)[: limit + 1]
    return GoldbachTable(k=k, limit=limit, values=out, method="direct")


def gk_fft(table: MangoldtTable, k: int, limit: int) -> GoldbachTable:
    """G_k via a real-input FFT power, zero-padded past any wraparound.

    The k-fold convolution of coefficients supported on [1, N] is
    supported on [k, kN]; padding to the next power of two >= kN + 1 makes
    the cyclic convolution agree with the linear one exactly.
    """
    _check_build_args(table, k, limit)
    needed = k * limit + 1
    pad = 1 << needed.bit_length()
    if pad > _MAX_FFT_LEN:
        raise ValueError(f"FFT padding {pad} exceeds supported size {_MAX_FFT_LEN}")
    spectrum = np.fft.rfft(table.values[: limit + 1], pad)
    full = np.fft.irfft(spectrum**k, pad)
    return GoldbachTable(k=k, limit=limit, values=full[: limit + 1].copy(),
                         method="fft")


def sk_prefix(table: GoldbachTable) -> PrefixSums:
    """Running averages S_k(X) for X = 0..limit, compensated."""
    hi, lo = running_prefix(table.values)
    return PrefixSums(k=table.k, limit=table.limit, sums=hi + lo, hi=hi, lo=lo)


def bk_truncated(table: MangoldtTable, k: int, n: int, x: float) -> float:
    """Part-capped sum over compositions with coefficients Lambda - 1.

    sum over n_1 + ... + n_k = n, 1 <= n_i <= x, of prod (Lambda(n_i) - 1),
    evaluated by iterated direct convolution of the capped coefficient
    array (distributively identical to the composition sum).
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if x > table.limit:
        raise ValueError(f"cap {x} exceeds sieve limit {table.limit}")
    if n > k * x:
        raise ValueError(f"n = {n} unreachable with {k} parts <= {x}")
    if n < k:
        return 0.0
    cap = min(int(math.floor(x)), n)
    base = np.zeros(cap + 1)
    base[1:] = table.values[1 : cap + 1] - 1.0
    out = base.copy() if n <= cap else np.concatenate([base, np.zeros(n - cap)])
    out = out[: n + 1]
    for _ in range(k - 1):
        out = np.convolve(out, base)[: n + 1]
    return float(out[n])


def bk_decomposition_check(table: MangoldtTable, k: int, n: int) -> tuple[float, float]:
    """Both sides of the alternating expansion of the part-capped sum.

    For x >= n the cap is inactive and expanding prod(Lambda(n_i) - 1)
    by how many factors take the -1 gives

      B_k(n) = sum_{i=0}^{k} (-1)^i C(k,i) W_i,
      W_i = sum_m C(n-m-1, i-1) G_{k-i}(m)   (1 <= i <= k-1),
      W_0 = G_k(n),  W_k = C(n-1, k-1),

    where the binomial counts the compositions of the i free parts.
    Returns (direct capped sum at x = n, expansion); they agree to
    rounding.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if not k <= n <= table.limit:
        raise ValueError(f"need k <= n <= sieve limit, got n = {n}")
    lhs = bk_truncated(table, k, n, float(n))

    # G_1 = Lambda; higher tables by direct convolution up to n.
    tables: dict[int, np.ndarray] = {1: table.values[: n + 1]}
    for level in range(2, k + 1):
        tables[level] = gk_direct(table, level, n, cap=max(n, DIRECT_ORACLE_CAP)).values

    terms: list[float] = []
    terms.append(float(tables[k][n]))  # i = 0
    for i in range(1, k):
        g = tables[k - i]
        inner = [
            math.comb(n - m - 1, i - 1) * float(g[m])
            for m in range(max(1, k - i), n - i + 1)
        ]
        terms.append((-1) ** i * math.comb(k, i) * math.fsum(inner))
    terms.append((-1) ** k * math.comb(n - 1, k - 1))  # i = k
    return lhs, math.fsum(terms)


def riesz_T(j: int, x: float, table: GoldbachTable) -> float:
    """T_j(x) = (1/j!) sum_{n <= x} (x-n)^j G_k(n); T_0 is S_k(x)."""
    if j < 0:
        raise ValueError(f"need j >= 0, got {j}")
    if x > table.limit:
        raise ValueError(f"{x} exceeds table limit {table.limit}")
    m = int(math.floor(x))
    if m < 1:
        return 0.0
    n = np.arange(1, m + 1, dtype=np.float64)
    terms = table.values[1 : m + 1] * (x - n) ** j
    return exact_sum(terms) / math.factorial(j)


def _factor_distinct_primes(n: int) -> list[int]:
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def singular_series(query: SingularSeriesQuery) -> tuple[float, float]:
    """Truncated local-density product for G_k(n), with a tail estimate.

    value = prod_{p | n} (1 - (-1/(p-1))^(k-1)) * prod_{p !| n} (1 - (-1/(p-1))^k)

    The second product is truncated at p <= prime_cutoff; prime divisors of
    n are always included, even above the cutoff.  The reported tail is a
    value-scale bound: the omitted non-divisor factors satisfy
    |log(1 - u)| <= 2|u| with |u| = (p-1)^(-k), and summing over integers
    beyond the cutoff P gives sum |log| <= 2 (P-1)^(1-k) / (k-1), so
    |true - truncated| <= |truncated| * expm1(of that).
    """
    k, n, cutoff = query.k, query.n, query.prime_cutoff
    divisors = set(_factor_distinct_primes(n))
    factors: list[float] = []
    for p in primes_up_to(int(math.floor(cutoff))):
        p = int(p)
        u = -1.0 / (p - 1)
        if p in divisors:
            factors.append(1.0 - u ** (k - 1))
        else:
            factors.append(1.0 - u**k)
    for p in sorted(divisors):
        if p > cutoff:
            u = -1.0 / (p - 1)
            factors.append(1.0 - u ** (k - 1))
    value = 1.0
    for f in factors:
        value *= f
    tail_log = 2.0 * (cutoff - 1.0) ** (1 - k) / (k - 1)
    return value, abs(value) * math.expm1(tail_log)


def write_goldbach_csv(table: GoldbachTable, stream) -> None:
    """Dump (n, G_k(n)) rows with a self-describing header, 17 significant digits."""
    stream.write(f"# k={table.k} N={table.limit} method={table.method}\n")
    stream.write("n,value\n")
    for n in range(table.k, table.limit + 1):
        stream.write(f"{n},{table.values[n]:.17g}\n")
