"""Deterministic compensated accumulation helpers.

Every weighted prime sum in this package is accumulated in ascending index
order with error-free transformations, so repeated runs are bit-identical
and summation drift stays far below the test tolerances.
"""

import math

import numpy as np


def exact_sum(values) -> float:
    """Correctly rounded sum (Shewchuk partials via math.fsum).

    Accepts any iterable of floats, including numpy arrays.  The result is
    independent of grouping, which is what makes the order-reversal
    determinism guards in the test suite exact rather than approximate.
    """
    if isinstance(values, np.ndarray):
        values = values.tolist()
    return math.fsum(values)


def running_prefix(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Neumaier running sums of ``values``.

    Returns (hi, lo) with hi[i] + lo[i] equal to sum(values[:i+1]) to far
    better than double precision.  Keeping the compensation term per index
    lets callers reconstruct adjacent differences without the catastrophic
    cancellation a plain float64 cumsum would suffer at large magnitudes.
    """
    n = len(values)
    hi = np.empty(n)
    lo = np.empty(n)
    s = 0.0
    c = 0.0
    for i in range(n):
        v = float(values[i])
        t = s + v
        if abs(s) >= abs(v):
            c += (s - t) + v
        else:
            c += (v - t) + s
        s = t
        hi[i] = s
        lo[i] = c
    return hi, lo


def prefix_increment(hi: np.ndarray, lo: np.ndarray, i: int) -> float:
    """Compensated difference sum[:i+1] - sum[:i] of a running_prefix pair."""
    if i == 0:
        return hi[0] + lo[0]
    return (hi[i] - hi[i - 1]) + (lo[i] - lo[i - 1])


def weighted_power_sum(coeffs: np.ndarray, x: float, j: int) -> float:
    """sum_{1 <= n <= x} coeffs[n] * (x - n)**j, exactly accumulated.

    ``coeffs`` is indexed from 0; index 0 is ignored.  For j = 0 every term
    is coeffs[n] * 1.0, which is bit-identical to coeffs[n], so the j = 0
    case reproduces a plain compensated sum of the coefficients exactly.
    """
    m = int(math.floor(x))
    if m < 1:
        return 0.0
    m = min(m, len(coeffs) - 1)
    n = np.arange(1, m + 1, dtype=np.float64)
    terms = coeffs[1 : m + 1] * (x - n) ** j
    return exact_sum(terms)


def riesz_integral(coeffs: np.ndarray, j: int, x: float) -> float:
    """Exact integral over [0, x] of the order-(j) Riesz mean of ``coeffs``.

    The integrand t -> (1/j!) sum_{n <= t} coeffs[n] (t-n)^j is piecewise
    polynomial with breakpoints at the integers, so each unit cell [a, b]
    contributes sum_{n <= a} coeffs[n] ((b-n)^{j+1} - (a-n)^{j+1}) and the
    total needs only a division by (j+1)!.  No quadrature is involved; the
    result differs from the direct order-(j+1) Riesz sum only by
    floating-point grouping.
    """
    if x <= 1.0:
        return 0.0
    terms: list[float] = []
    top = math.floor(x)
    for a in range(1, int(top) + 1):
        b = min(float(a + 1), x)
        if b <= a:
            break
        n = np.arange(1, a + 1, dtype=np.float64)
        cell = coeffs[1 : a + 1] * ((b - n) ** (j + 1) - (a - n) ** (j + 1))
        terms.extend(cell.tolist())
    return math.fsum(terms) / math.factorial(j + 1)


def within_tolerance(a, b, rel: float = 1e-9, abs_floor: float = 1e-12,
                     scale: float | None = None) -> bool:
    """Elementwise |a-b| <= max(rel * max(|a|,|b|), floor) comparison.

    ``scale`` widens the absolute floor to abs_floor * max(1, scale); FFT
    round-off is proportional to the transform's total energy rather than
    to individual entries, so comparisons against structurally-zero entries
    of a large table must use the table's magnitude as the floor scale.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    floor = abs_floor * max(1.0, scale if scale is not None else 0.0)
    tol = np.maximum(rel * np.maximum(np.abs(a), np.abs(b)), floor)
    return bool(np.all(np.abs(a - b) <= tol))


def max_discrepancy(a, b, rel: float = 1e-9, abs_floor: float = 1e-12,
                    scale: float | None = None) -> float:
    """Largest elementwise discrepancy under the same floor policy.

    Calibrated so that ``max_discrepancy(a, b, rel, ...) <= rel`` holds
    exactly when every element satisfies within_tolerance: entries whose
    magnitudes sit below floor/rel are measured against the floor rather
    than against themselves.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    floor = abs_floor * max(1.0, scale if scale is not None else 0.0)
    denom = np.maximum(np.maximum(np.abs(a), np.abs(b)), floor / rel)
    return float(np.max(np.abs(a - b) / denom))
