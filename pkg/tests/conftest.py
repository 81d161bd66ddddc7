import json
import math
import pathlib

import pytest

from goldbachkit import build_mangoldt, bundled_zeros

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def sieve_10k():
    return build_mangoldt(10_000)


@pytest.fixture(scope="session")
def sieve_131072():
    return build_mangoldt(1 << 17)


@pytest.fixture(scope="session")
def sieve_262144():
    return build_mangoldt(1 << 18)


@pytest.fixture(scope="session")
def zeros100():
    return bundled_zeros()


@pytest.fixture(scope="session")
def calibration():
    with open(FIXTURES / "calibration.json") as handle:
        return json.load(handle)


def lambda_by_trial_division(n: int) -> float:
    """Independent Lambda oracle: trial-factor n and test prime-power shape."""
    if n < 2:
        return 0.0
    m = n
    base = 0
    for p in range(2, n + 1):
        if p * p > m:
            break
        if m % p == 0:
            base = p
            while m % p == 0:
                m //= p
            break
    if base == 0:
        return math.log(n)  # n itself prime
    if m != 1:
        return 0.0  # second distinct prime factor survived
    return math.log(base)
