import io
import math

import numpy as np
import pytest

from goldbachkit import (
    SingularSeriesQuery,
    bk_decomposition_check,
    bk_truncated,
    build_mangoldt,
    gk_direct,
    gk_fft,
    max_discrepancy,
    riesz_T,
    singular_series,
    sk_prefix,
    write_goldbach_csv,
)
from goldbachkit.accum import riesz_integral

LOG2 = math.log(2)
LOG3 = math.log(3)


def brute_gk(table, k, n):
    """Composition-enumeration oracle for G_k(n)."""
    values = table.values

    def rec(parts_left, remaining, acc):
        if parts_left == 1:
            if 1 <= remaining <= table.limit:
                return acc * values[remaining]
            return 0.0
        total = 0.0
        for part in range(1, remaining - parts_left + 2):
            if values[part] != 0.0:
                total += rec(parts_left - 1, remaining - part, acc * values[part])
        return total

    return rec(k, n, 1.0)


def brute_bk(table, k, n, x):
    """Composition-enumeration oracle for the part-capped Lambda-1 sum."""
    cap = int(math.floor(x))

    def rec(parts_left, remaining):
        if parts_left == 1:
            if 1 <= remaining <= cap:
                return table.values[remaining] - 1.0
            return 0.0
        total = 0.0
        for part in range(1, min(cap, remaining - parts_left + 1) + 1):
            total += (table.values[part] - 1.0) * rec(parts_left - 1, remaining - part)
        return total

    return rec(k, n)


def test_gk_direct_examples(sieve_10k):
    g2 = gk_direct(sieve_10k, 2, 16)
    assert g2.values[4] == pytest.approx(LOG2**2, rel=1e-15)
    assert g2.values[5] == pytest.approx(2 * LOG2 * LOG3, rel=1e-15)
    assert g2.values[3] == 0.0
    g3 = gk_direct(sieve_10k, 3, 16)
    assert g3.values[6] == pytest.approx(LOG2**3, rel=1e-15)


def test_gk_against_enumeration(sieve_10k):
    for k in (2, 3):
        table = gk_direct(sieve_10k, k, 24)
        for n in range(1, 25):
            assert table.values[n] == pytest.approx(
                brute_gk(sieve_10k, k, n), rel=1e-12, abs=1e-12
            ), (k, n)


def test_gk_zero_below_k(sieve_10k):
    for k in (2, 3, 4):
        table = gk_direct(sieve_10k, k, 64)
        assert np.all(table.values[:k] == 0.0)
        assert np.all(table.values >= 0.0)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_fft_matches_direct(sieve_10k, k):
    n = 256
    direct = gk_direct(sieve_10k, k, n)
    fft = gk_fft(sieve_10k, k, n)
    scale = float(np.max(direct.values))
    assert max_discrepancy(direct.values, fft.values, scale=scale) <= 1e-9


def test_fft_small_table_zero_entry(sieve_10k):
    # at tiny sizes the FFT noise sits below the literal absolute floor
    fft = gk_fft(sieve_10k, 2, 16)
    assert abs(fft.values[3]) <= 1e-12


def test_gk_invariant_under_sieve_extension():
    small = build_mangoldt(128)
    large = build_mangoldt(256)
    for k in (2, 3):
        a = gk_direct(small, k, 128).values
        b = gk_direct(large, k, 128).values
        assert max_discrepancy(a, b, scale=float(np.max(a))) <= 1e-12


def test_convolution_recursion(sieve_10k):
    # G_k = G_{k-1} * Lambda over parts >= 1
    limit = 96
    tables = {1: sieve_10k.values[: limit + 1]}
    for k in (2, 3, 4):
        tables[k] = gk_direct(sieve_10k, k, limit).values
    for k in (3, 4):
        for n in (k, k + 5, 40, 96):
            direct = math.fsum(
                tables[k - 1][n - m] * sieve_10k.values[m] for m in range(1, n)
            )
            assert tables[k][n] == pytest.approx(direct, rel=1e-12, abs=1e-12)


def test_direct_cap(sieve_10k):
    with pytest.raises(ValueError):
        gk_direct(sieve_10k, 2, 9000)
    # opting in via the cap parameter works
    gk_direct(sieve_10k, 2, 8300, cap=8300)


def test_prefix_sums(sieve_10k):
    g2 = gk_direct(sieve_10k, 2, 4096)
    prefix = sk_prefix(g2)
    expected = LOG2**2 + 2 * LOG2 * LOG3
    assert prefix.sums[5] == pytest.approx(expected, rel=1e-14)
    assert prefix.sums[1] == 0.0  # X = k - 1
    assert np.all(np.diff(prefix.sums) >= -1e-12)
    # main-term dominance at moderate scale
    ratio = prefix.sums[4096] / (4096.0**2 / 2.0)
    assert 0.9 <= ratio <= 1.1


def test_prefix_increments_reproduce_values(sieve_10k):
    g2 = gk_fft(sieve_10k, 2, 4096)
    prefix = sk_prefix(g2)
    for x in (2, 3, 4, 149, 1024, 4095, 4096):
        inc = prefix.increment(x)
        ref = g2.values[x]
        assert abs(inc - ref) <= max(1e-9 * abs(ref), 1e-12), x


def test_bk_truncated_trivial(sieve_10k):
    assert bk_truncated(sieve_10k, 2, 2, 1.0) == 1.0
    assert bk_truncated(sieve_10k, 3, 3, 1.0) == -1.0


def test_bk_truncated_against_enumeration(sieve_10k):
    for k, n, x in [(2, 4, 4.0), (2, 9, 5.0), (3, 9, 4.0), (3, 12, 12.0), (4, 10, 3.0)]:
        assert bk_truncated(sieve_10k, k, n, x) == pytest.approx(
            brute_bk(sieve_10k, k, n, x), rel=1e-12, abs=1e-12
        ), (k, n, x)


def test_bk_truncation_saturates(sieve_10k):
    for k, n in [(2, 12), (3, 17)]:
        at_n = bk_truncated(sieve_10k, k, n, float(n))
        for x in (float(n), n + 1.0, 2.0 * n, 10.0 * n):
            assert bk_truncated(sieve_10k, k, n, x) == pytest.approx(at_n, rel=1e-12)


def test_bk_unreachable_raises(sieve_10k):
    with pytest.raises(ValueError):
        bk_truncated(sieve_10k, 2, 10, 4.0)


def test_bk_decomposition(sieve_10k):
    lhs, rhs = bk_decomposition_check(sieve_10k, 2, 2)
    assert lhs == 1.0
    assert rhs == pytest.approx(1.0, rel=1e-12)
    for k, n in [(2, 6), (3, 8), (2, 40), (3, 30), (4, 25)]:
        lhs, rhs = bk_decomposition_check(sieve_10k, k, n)
        assert lhs == pytest.approx(rhs, rel=1e-8, abs=1e-9), (k, n)


def test_riesz_T(sieve_10k):
    g2 = gk_direct(sieve_10k, 2, 600)
    prefix = sk_prefix(g2)
    for x in (6.0, 127.0, 600.0):
        assert riesz_T(0, x, g2) == pytest.approx(prefix.sums[int(x)], rel=1e-12)
    expected = 2 * LOG2**2 + 2 * LOG2 * LOG3
    assert riesz_T(1, 6.0, g2) == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("j", [0, 1, 2])
def test_riesz_T_integral_identity(sieve_10k, j):
    g2 = gk_direct(sieve_10k, 2, 512)
    for x in (10.0, 100.0, 500.0):
        direct = riesz_T(j + 1, x, g2)
        integral = riesz_integral(g2.values, j, x)
        assert direct == pytest.approx(integral, rel=1e-9, abs=1e-12)


def test_singular_series_odd_vanishes():
    for n in (1, 3, 5, 99, 1001):
        value, tail = singular_series(SingularSeriesQuery(2, n, 1000.0))
        assert value == 0.0
        assert tail == 0.0


def test_singular_series_twin_constant():
    value, _ = singular_series(SingularSeriesQuery(2, 2, 10_000.0))
    assert value == pytest.approx(2 * 0.6601618158468696, rel=2e-4)
    # independent evaluation of the truncated product
    from goldbachkit import primes_up_to

    product = 2.0  # p = 2 divides n
    for p in primes_up_to(10_000)[1:]:
        product *= 1.0 - 1.0 / (int(p) - 1) ** 2
    assert value == pytest.approx(product, rel=1e-12)


def test_singular_series_truncation_within_tail():
    for p_cut in (1000.0, 10_000.0):
        v1, tail = singular_series(SingularSeriesQuery(2, 2, p_cut))
        v2, _ = singular_series(SingularSeriesQuery(2, 2, 2 * p_cut))
        assert abs(v1 - v2) <= tail


def test_singular_series_k3():
    value, _ = singular_series(SingularSeriesQuery(3, 1, 10_000.0))
    assert value > 0.0
    # with k = 3 even n has a vanishing local factor at p = 2
    value_even, _ = singular_series(SingularSeriesQuery(3, 8, 1000.0))
    assert value_even == 0.0


def test_singular_series_large_prime_divisor_included():
    # n carries a prime divisor above the cutoff; its factor must be applied
    n = 2 * 104729  # 104729 prime and > cutoff
    with_factor, _ = singular_series(SingularSeriesQuery(2, n, 100.0))
    without, _ = singular_series(SingularSeriesQuery(2, 2, 100.0))
    u = -1.0 / (104729 - 1)
    assert with_factor == pytest.approx(without * (1.0 - u), rel=1e-12)


def test_csv_dump(sieve_10k):
    table = gk_direct(sieve_10k, 2, 8)
    out = io.StringIO()
    write_goldbach_csv(table, out)
    lines = out.getvalue().splitlines()
    assert lines[0] == "# k=2 N=8 method=direct"
    assert lines[1] == "n,value"
    assert lines[2].startswith("2,0")
