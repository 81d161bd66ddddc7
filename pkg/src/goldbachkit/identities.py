"""Exact integer verification of the combinatorial identities.

Everything here runs in arbitrary-precision integer (or exact rational)
arithmetic: alternating binomial sums, the f_{k,i} family and its
recurrence, the partial-fraction coefficient solve whose top coefficient
is k!, and the hockey-stick identity.  No floats anywhere.
"""

import math
from fractions import Fraction


def f_ki(k: int, i: int) -> int:
    """Alternating sum k^i - C(k,1)(k-1)^i + ... + (-1)^(k-1) C(k,k-1) 1^i.

    Vanishes for 1 <= i <= k-1 and equals k! at i = k.
    """
    if k < 1 or i < 1:
        raise ValueError("f_ki requires k >= 1 and i >= 1")
    return sum((-1) ** j * math.comb(k, j) * (k - j) ** i for j in range(k))


def verify_fki_recurrence(k: int, i: int) -> bool:
    """Exact check of f_{k,i} = k (f_{k,i-1} + f_{k-1,i-1})."""
    if k < 2 or i < 2:
        raise ValueError("recurrence check requires k >= 2 and i >= 2")
    return f_ki(k, i) == k * (f_ki(k, i - 1) + f_ki(k - 1, i - 1))


def solve_ak(k: int) -> list[int]:
    """Coefficients a_0..a_k with sum_j C(n+j, j) a_j = n^k for n = 0..k.

    Solved in exact rational arithmetic; the solution is integral (checked,
    failure raises) and its leading coefficient equals k!.  Because both
    sides are degree-k polynomials in n agreeing at k+1 points, the
    identity automatically extends to every nonnegative integer n.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    size = k + 1
    rows = [
        [Fraction(math.comb(n + j, j)) for j in range(size)] + [Fraction(n**k)]
        for n in range(size)
    ]
    # Gaussian elimination, exact.
    for col in range(size):
        pivot = next(r for r in range(col, size) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = Fraction(1) / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for r in range(size):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[col])]
    coeffs = []
    for j in range(size):
        value = rows[j][size]
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral coefficient a_{j} = {value}")
        coeffs.append(int(value))
    if coeffs[k] != math.factorial(k):
        raise ArithmeticError(f"leading coefficient {coeffs[k]} != {k}!")
    return coeffs


def alternating_sums(k: int) -> tuple[int, int]:
    """(sum (-1)^i C(k,i), sum (-1)^i C(k,i)(k-i)); both are 0 for k >= 2."""
    if k < 2:
        raise ValueError("need k >= 2")
    first = sum((-1) ** i * math.comb(k, i) for i in range(k + 1))
    second = sum((-1) ** i * math.comb(k, i) * (k - i) for i in range(k + 1))
    return first, second


def derivative_alternating_sum(k: int) -> int:
    """sum_j (-1)^j j C(k,j); vanishes for k >= 2 (derivative of (1-x)^k at 1)."""
    if k < 2:
        raise ValueError("need k >= 2")
    return sum((-1) ** j * j * math.comb(k, j) for j in range(k + 1))


def hockey_stick(i: int, m: int) -> tuple[int, int]:
    """(C(i-1,i-1) + C(i,i-1) + ... + C(i+m,i-1), C(i+m+1,i)), both exact.

    The run has m+2 terms, ending at top index i+m; the two components are
    equal for every i >= 1, m >= 0.
    """
    if i < 1 or m < 0:
        raise ValueError("need i >= 1 and m >= 0")
    lhs = sum(math.comb(i - 1 + t, i - 1) for t in range(m + 2))
    rhs = math.comb(i + m + 1, i)
    return lhs, rhs


def run_identity_suite(kmax: int = 25) -> list[tuple[str, bool]]:
    """Run every exact identity up to kmax; returns (name, passed) rows."""
    results: list[tuple[str, bool]] = []
    results.append((
        "f_ki vanishes for 1<=i<k",
        all(f_ki(k, i) == 0 for k in range(2, kmax + 1) for i in range(1, k)),
    ))
    results.append((
        "f_kk equals k!",
        all(f_ki(k, k) == math.factorial(k) for k in range(1, kmax + 1)),
    ))
    results.append((
        "f_ki recurrence",
        all(
            verify_fki_recurrence(k, i)
            for k in range(2, kmax + 1)
            for i in range(2, kmax + 1)
        ),
    ))
    def _ak_ok(k):
        coeffs = solve_ak(k)
        if coeffs[k] != math.factorial(k):
            return False
        # the defining relation must extend past the construction range
        return all(
            sum(math.comb(n + j, j) * coeffs[j] for j in range(k + 1)) == n**k
            for n in range(k + 6)
        )
    results.append(("a_k = k! with extension", all(_ak_ok(k) for k in range(1, kmax + 1))))
    results.append((
        "alternating binomial sums vanish",
        all(alternating_sums(k) == (0, 0) for k in range(2, kmax + 1)),
    ))
    results.append((
        "derivative alternating sum vanishes",
        all(derivative_alternating_sum(k) == 0 for k in range(2, kmax + 1)),
    ))
    results.append((
        "hockey stick",
        all(
            hockey_stick(i, m)[0] == hockey_stick(i, m)[1]
            for i in range(1, kmax + 1)
            for m in range(0, 26)
        ),
    ))
    return results
