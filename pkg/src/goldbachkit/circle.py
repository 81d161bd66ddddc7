"""Circle-method numerics on |z| = R = 1 - 1/N.

Exponential sums with coefficients Lambda - 1, the Dirichlet kernel bound,
mean-square expected values, the power series F(z) = sum Lambda(n) z^n,
the coefficient-extraction kernel K(z) = z^(-N-1)(1 - z^N)/(1 - z) and the
contour recovery of psi(N), closed-form checks of sum n^k z^n, major/minor
arc classification, and the Parseval mass of F - 1/(1-z).
"""

import cmath
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .accum import exact_sum, max_discrepancy
from .goldbach import gk_fft, sk_prefix
from .identities import solve_ak
from .mangoldt import MangoldtTable, chebyshev_psi

# Below this distance from z = 1 the closed form of the kernel cancels
# catastrophically; switch to the explicit geometric sum.
_KERNEL_GUARD = 1e-6


@dataclass(frozen=True)
class CircleGrid:
    """M equally spaced nodes z = R e(m/M) on the circle of radius 1 - 1/N."""

    n: int
    nodes: int
    radius: float = field(init=False)
    thetas: np.ndarray = field(init=False, repr=False)
    z: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need N >= 2 for a nondegenerate radius, got {self.n}")
        if self.nodes < 4 * self.n:
            raise ValueError(
                f"need at least 4N = {4 * self.n} nodes to avoid aliasing, "
                f"got {self.nodes}"
            )
        object.__setattr__(self, "radius", 1.0 - 1.0 / self.n)
        thetas = np.arange(self.nodes) / self.nodes
        object.__setattr__(self, "thetas", thetas)
        object.__setattr__(self, "z", self.radius * np.exp(2j * np.pi * thetas))
        self.thetas.setflags(write=False)
        self.z.setflags(write=False)


@dataclass(frozen=True)
class ArcClassification:
    """Per-node major/minor flags: major iff |1 - z| < N^(delta/(k+1) - 1)."""

    grid: CircleGrid
    k: int
    delta: float
    threshold: float
    is_major: np.ndarray = field(repr=False)
    major_fraction: float
    analytic_measure: float

    def __post_init__(self):
        self.is_major.setflags(write=False)


def s0_sum(table: MangoldtTable, alpha: float, x: float) -> complex:
    """S_0(alpha, x) = sum_{n <= x} (Lambda(n) - 1) e(n alpha)."""
    if x > table.limit:
        raise ValueError(f"{x} exceeds sieve limit {table.limit}")
    m = int(math.floor(x))
    if m < 1:
        return 0j
    n = np.arange(1, m + 1, dtype=np.float64)
    coeff = table.values[1 : m + 1] - 1.0
    phases = np.exp(2j * np.pi * alpha * n)
    return complex(exact_sum(coeff * phases.real), exact_sum(coeff * phases.imag))


def dirichlet_I(x: float, alpha: float) -> complex:
    """I(x, alpha) = sum_{n <= x} e(n alpha), in closed geometric form.

    The size bound |I| <= min(floor(x), 1/(2 ||alpha||)) is checked on
    every call (||.|| is the distance to the nearest integer).
    """
    if x < 1:
        raise ValueError(f"need x >= 1, got {x}")
    m = int(math.floor(x))
    dist = abs(alpha - round(alpha))
    if dist == 0.0:
        return complex(m, 0.0)
    w = cmath.exp(2j * math.pi * alpha)
    value = w * (w**m - 1.0) / (w - 1.0)
    bound = min(float(m), 1.0 / (2.0 * dist))
    if abs(value) > bound * (1.0 + 1e-9):
        raise AssertionError(f"|I({x}, {alpha})| = {abs(value)} exceeds {bound}")
    return value


def _prefix_s0(table: MangoldtTable, alpha: float, up_to: int) -> np.ndarray:
    n = np.arange(1, up_to + 1, dtype=np.float64)
    coeff = (table.values[1 : up_to + 1] - 1.0).astype(complex)
    return np.cumsum(coeff * np.exp(2j * np.pi * alpha * n))


def expected_value_E(table: MangoldtTable, alpha: float, x: float) -> float:
    """E_x(|S_0(alpha)|^2) = (1/x) integral_x^{2x} |S_0(alpha, t)|^2 dt, exact.

    S_0 is piecewise constant in t with jumps at the integers, so the
    integral is the sum of |prefix|^2 over unit cells, with the first and
    last cells weighted by their fractional overlap with [x, 2x].
    """
    if x <= 0:
        raise ValueError(f"need x > 0, got {x}")
    if 2 * x > table.limit:
        raise ValueError(f"need 2x <= sieve limit, got 2x = {2 * x}")
    hi = 2.0 * x
    prefix = _prefix_s0(table, alpha, int(math.floor(hi)))

    def cell_value(m: int) -> float:
        if m < 1:
            return 0.0
        return float(abs(prefix[m - 1]) ** 2)

    pieces: list[float] = []
    m = int(math.floor(x))
    while m < hi:
        left = max(float(m), x)
        right = min(float(m + 1), hi)
        if right > left:
            pieces.append(cell_value(m) * (right - left))
        m += 1
    return math.fsum(pieces) / x


def gy_lemma_diagnostic(table: MangoldtTable, x: float, h: float,
                        min_nodes_per_h: int = 64) -> tuple[float, float]:
    """Mean-square mass of S_0 near alpha = 0 against x log^2 x / h.

    Integrates E_x(|S_0|^2) over [-1/2h, 1/2h] by composite trapezoid with
    at least 64 h nodes (and enough to resolve the 1/x oscillation scale
    of the integrand).  The ratio of the two return values is a monitored
    diagnostic; the implied constant is unknown, so nothing is asserted
    here.
    """
    if not 1 <= h <= x:
        raise ValueError(f"need 1 <= h <= x, got h = {h}")
    if 2 * x > table.limit:
        raise ValueError(f"need 2x <= sieve limit, got 2x = {2 * x}")
    nodes = max(int(math.ceil(min_nodes_per_h * h)), 16 * int(math.ceil(x)))
    alphas = np.linspace(-0.5 / h, 0.5 / h, nodes + 1)
    values = np.array([expected_value_E(table, float(a), x) for a in alphas])
    integral = float(np.trapezoid(values, alphas))
    reference = x * math.log(x) ** 2 / h
    return integral, reference


class PartialSeries(NamedTuple):
    value: complex
    tail_bound: float


def f_partial(table: MangoldtTable, z: complex, terms: int) -> PartialSeries:
    """F(z) truncated: sum_{n <= terms} Lambda(n) z^n for |z| < 1.

    Powers are taken per-term (no running-product drift) and the real and
    imaginary parts are accumulated with compensated summation.  The tail
    estimate log(M) |z|^(M+1) / (1 - |z|) accounts for the omitted
    coefficients, whose logs grow slower than the geometric decay.
    """
    z = complex(z)
    if abs(z) >= 1.0:
        raise ValueError(f"need |z| < 1, got |z| = {abs(z)}")
    if terms > table.limit:
        raise ValueError(f"truncation {terms} exceeds sieve limit {table.limit}")
    support = np.nonzero(table.values[: terms + 1])[0]
    real_parts: list[float] = []
    imag_parts: list[float] = []
    for n in support:
        term = table.values[n] * z ** int(n)
        real_parts.append(term.real)
        imag_parts.append(term.imag)
    value = complex(math.fsum(real_parts), math.fsum(imag_parts))
    m = max(int(terms), 2)
    tail = math.log(m) * abs(z) ** (m + 1) / (1.0 - abs(z))
    return PartialSeries(value=value, tail_bound=tail)


def _geometric_sum(z: complex, count: int) -> complex:
    total = 0j
    power = 1.0 + 0j
    for _ in range(count):
        total += power
        power *= z
    return total


def kernel_K(z: complex, n: int) -> complex:
    """K(z) = z^(-N-1) (1 - z^N) / (1 - z), guarded near the removable z = 1.

    Within 1e-6 of z = 1 the quotient is evaluated as the geometric sum
    1 + z + ... + z^(N-1) instead of the cancelling closed form; K(1) = N.
    """
    z = complex(z)
    if z == 0:
        raise ValueError("kernel has a pole of order N+1 at z = 0")
    if abs(1.0 - z) < _KERNEL_GUARD:
        body = _geometric_sum(z, n)
    else:
        body = (1.0 - z**n) / (1.0 - z)
    return z ** (-n - 1) * body


def _kernel_on_grid(grid: CircleGrid) -> np.ndarray:
    n = grid.n
    r = grid.radius
    theta = grid.thetas
    z_neg = r ** (-n - 1) * np.exp(-2j * np.pi * (n + 1) * theta)
    z_n = r**n * np.exp(2j * np.pi * n * theta)
    one_minus = 1.0 - grid.z
    out = np.empty(grid.nodes, dtype=complex)
    near = np.abs(one_minus) < _KERNEL_GUARD
    ok = ~near
    out[ok] = z_neg[ok] * (1.0 - z_n[ok]) / one_minus[ok]
    for idx in np.nonzero(near)[0]:
        out[idx] = kernel_K(complex(grid.z[idx]), n)
    return out


def _f_on_grid(table: MangoldtTable, grid: CircleGrid, terms: int) -> np.ndarray:
    """F truncated at ``terms`` on all grid nodes, by running powers.

    The running product z^n accumulates ~terms ulp of relative drift,
    orders of magnitude below the contour-recovery tolerance.
    """
    powers = np.ones(grid.nodes, dtype=complex)
    total = np.zeros(grid.nodes, dtype=complex)
    for n in range(1, terms + 1):
        powers = powers * grid.z
        lam = table.values[n]
        if lam:
            total += lam * powers
    return total


def cauchy_psi_recovery(table: MangoldtTable, n: int,
                        m_nodes: int) -> tuple[float, float]:
    """psi(N) two ways: contour quadrature and direct coefficient extraction.

    The contour route integrates F(z) K(z) z dtheta over the uniform grid
    (trapezoid; dz = 2 pi i z dtheta cancels the 1/(2 pi i)); F is
    truncated at 2N, which the kernel's exponent window makes exact.  The
    coefficient route is sum_{n <= N} Lambda(n), the same compensated path
    as chebyshev_psi.  Node counts below 4N alias the z^(-N-1) factor and
    are refused.
    """
    if table.limit < 2 * n:
        raise ValueError(f"need sieve limit >= 2N = {2 * n}, have {table.limit}")
    if m_nodes < 4 * n:
        raise ValueError(f"{m_nodes} nodes would alias; need at least 4N = {4 * n}")
    if n == 1:
        # radius 1 - 1/N degenerates to 0; the only candidate coefficient
        # is Lambda(1) = 0, so both routes are identically zero
        return 0.0, chebyshev_psi(table, 1.0)
    grid = CircleGrid(n=n, nodes=m_nodes)
    f_values = _f_on_grid(table, grid, 2 * n)
    integrand = f_values * _kernel_on_grid(grid) * grid.z
    quadrature = float(np.mean(integrand).real)
    coefficient = chebyshev_psi(table, float(n))
    return quadrature, coefficient


class Lemma1Result(NamedTuple):
    difference: float
    comparator: float
    ratio: float
    budget: float


def lemma1_check(k: int, n: int, theta: float) -> Lemma1Result:
    """|sum_{m>=1} m^k z^m - k!/(1-z)^(k+1)| against |1-z|^(-k).

    z = (1 - 1/N) e(theta).  The series is evaluated exactly through its
    rational closed form sum_j a_j (1-z)^(-j-1) (a_j integral, a_k = k!),
    so the difference is exactly the contribution of the lower-order
    coefficients and satisfies
        ratio <= (sum_{j<k} |a_j|) * max(1, |1-z|^(k-1)),
    which is asserted; on the inner part of the circle (|1-z| <= 1) the
    budget alone bounds the ratio.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if n < 2:
        raise ValueError(f"need N >= 2, got {n}")
    z = (1.0 - 1.0 / n) * cmath.exp(2j * math.pi * theta)
    one_minus = 1.0 - z
    coeffs = solve_ak(k)
    series = sum(coeffs[j] / one_minus ** (j + 1) for j in range(k + 1))
    main = math.factorial(k) / one_minus ** (k + 1)
    difference = abs(series - main)
    comparator = abs(one_minus) ** (-k)
    ratio = difference / comparator
    budget = float(sum(abs(c) for c in coeffs[:k]))
    limit = budget * max(1.0, abs(one_minus) ** (k - 1))
    if ratio > limit * (1.0 + 1e-9):
        raise AssertionError(f"lemma ratio {ratio} exceeds exact budget {limit}")
    return Lemma1Result(difference=difference, comparator=comparator,
                        ratio=ratio, budget=budget)


def arc_classify(n: int, k: int, delta: float,
                 nodes: int | None = None) -> ArcClassification:
    """Classify grid nodes as major (near z = 1) or minor.

    The analytic measure is the exact angular fraction with
    |1 - z| < N^(delta/(k+1) - 1), from |1-z|^2 = (1-R)^2 + 4R sin^2(pi theta).
    """
    if not 0.0 < delta < 1.0:
        raise ValueError(f"need 0 < delta < 1, got {delta}")
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    grid = CircleGrid(n=n, nodes=nodes if nodes is not None else 4 * n)
    threshold = float(n) ** (delta / (k + 1) - 1.0)
    is_major = np.abs(1.0 - grid.z) < threshold
    r = grid.radius
    gap = 1.0 - r
    if threshold <= gap:
        measure = 0.0
    else:
        s2 = (threshold**2 - gap**2) / (4.0 * r)
        if s2 >= 1.0:
            measure = 1.0
        else:
            # half-width theta* solves sin(pi theta*) = sqrt(s2)
            measure = 2.0 * math.asin(math.sqrt(s2)) / math.pi
    return ArcClassification(
        grid=grid,
        k=k,
        delta=delta,
        threshold=threshold,
        is_major=is_major,
        major_fraction=float(np.count_nonzero(is_major)) / grid.nodes,
        analytic_measure=measure,
    )


def arc_sweep(table: MangoldtTable, n: int, k: int, delta: float,
              nodes: int | None = None):
    """Rows (theta, Re F, Im F, |F|, arc class) over a classified grid.

    F is truncated at min(2N, sieve limit), matching the contour-recovery
    truncation.
    """
    cls = arc_classify(n, k, delta, nodes)
    terms = min(2 * n, table.limit)
    f_values = _f_on_grid(table, cls.grid, terms)
    rows = []
    for idx in range(cls.grid.nodes):
        value = f_values[idx]
        rows.append((
            float(cls.grid.thetas[idx]),
            float(value.real),
            float(value.imag),
            float(abs(value)),
            "major" if cls.is_major[idx] else "minor",
        ))
    return rows


def minor_arc_l2(table: MangoldtTable, n: int) -> tuple[float, float]:
    """Parseval mass of F - 1/(1-z) on the circle against N log N.

    The angular mean square of sum_{m>=1} (Lambda(m)-1) z^m equals
    sum (Lambda(m)-1)^2 R^(2m); the sum is truncated at the sieve limit,
    which must be >= 8N so the geometric tail (under e^-16 of the last
    kept weight) is negligible -- this is asserted, not assumed.  The
    ratio against N log N is a monitored diagnostic.
    """
    if table.limit < 8 * n:
        raise ValueError(f"need sieve limit >= 8N = {8 * n}, have {table.limit}")
    r = 1.0 - 1.0 / n
    m = np.arange(1, table.limit + 1, dtype=np.float64)
    weights = r ** (2.0 * m)
    power_sum = exact_sum((table.values[1:] - 1.0) ** 2 * weights)
    log_l = math.log(table.limit)
    tail = (log_l + 1.0) ** 2 * r ** (2.0 * (table.limit + 1)) / (1.0 - r * r)
    if tail > 1e-9 * max(power_sum, 1.0):
        raise AssertionError(f"truncation tail {tail} not negligible")
    return power_sum, n * math.log(n)


def fz_powerseries_identity(table: MangoldtTable, k: int, n: int) -> float:
    """Coefficient-level check of F^k = sum G_k(m) z^m = (1-z) sum S_k(m) z^m.

    Compares the k-fold direct convolution of the Lambda coefficients with
    the FFT-built table, and the first differences of the prefix sums with
    the table, over m <= n.  Returns the largest relative discrepancy
    (absolute floor scaled to the table's magnitude).
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if n > table.limit:
        raise ValueError(f"{n} exceeds sieve limit {table.limit}")
    base = table.values[: n + 1]
    conv = base.copy()
    for _ in range(k - 1):
        conv = np.convolve(conv, base)[: n + 1]

    fft_table = gk_fft(table, k, n)
    scale = float(np.max(np.abs(conv)))
    worst = max_discrepancy(conv, fft_table.values, scale=scale)

    prefix = sk_prefix(fft_table)
    diffs = np.array([prefix.increment(m) for m in range(1, n + 1)])
    worst = max(worst, max_discrepancy(diffs, fft_table.values[1:], scale=scale))
    return worst
