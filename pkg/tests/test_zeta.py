import math

import pytest

from goldbachkit import bracket_zero, hardy_theta, hardy_z, zeta_euler_maclaurin


def test_zeta_at_known_points():
    # zeta(2) = pi^2/6, zeta(4) = pi^4/90, zeta(1/2) known constant
    assert zeta_euler_maclaurin(2.0).real == pytest.approx(math.pi**2 / 6, rel=1e-13)
    assert zeta_euler_maclaurin(4.0).real == pytest.approx(math.pi**4 / 90, rel=1e-13)
    assert zeta_euler_maclaurin(0.5).real == pytest.approx(-1.4603545088095868, rel=1e-10)
    assert abs(zeta_euler_maclaurin(2.0).imag) < 1e-14


def test_zeta_pole_rejected():
    with pytest.raises(ValueError):
        zeta_euler_maclaurin(1.0)


def test_hardy_z_is_real_scale():
    # |Z(t)| = |zeta(1/2+it)| by construction
    for t in (14.0, 20.0, 30.0):
        assert abs(hardy_z(t)) == pytest.approx(
            abs(zeta_euler_maclaurin(complex(0.5, t))), rel=1e-9
        )


def test_hardy_z_signs_bracket_first_zero():
    assert hardy_z(14.0) < 0 < hardy_z(14.3)


def test_bracket_first_two_zeros(zeros100):
    gamma1 = bracket_zero(14.0, 14.3)
    gamma2 = bracket_zero(20.9, 21.1)
    assert abs(gamma1 - zeros100.ordinates[0]) < 1e-6
    assert abs(gamma2 - zeros100.ordinates[1]) < 1e-6


def test_bracket_requires_sign_change():
    with pytest.raises(ValueError):
        bracket_zero(16.0, 17.0)  # Z > 0 throughout


def test_theta_validation():
    with pytest.raises(ValueError):
        hardy_theta(0.0)
