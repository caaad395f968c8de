"""Tests for the theta-ratio series and the numeric transformation suite."""

import math
import random
from fractions import Fraction

import pytest

from wittenq import theta
from wittenq.qseries import QSeries
from wittenq.theta import ThetaKind, UniSeries


def _frac(qs, k):
    return Fraction(str(qs.coefficient(k)))


def test_uniseries_ring_axioms():
    rng = random.Random(7)

    def rnd():
        return UniSeries(
            [QSeries([rng.randint(-4, 4) for _ in range(4)], 3)
             for _ in range(5)], 4, 3)

    for _ in range(6):
        a, b, c = rnd(), rnd(), rnd()
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_uniseries_inv_and_scale():
    x = UniSeries.x(6, 4)
    u = UniSeries.one(6, 4) + x
    assert u * u.inv_unit() == UniSeries.one(6, 4)
    # (1 + x) scaled by d=3 is 1 + 3x
    s = u.scale_x(3)
    assert s.coefficient(1) == QSeries.constant(3, 4)


def test_exp_x_taylor_coefficients():
    e = theta.exp_x(1, 6, 0)
    for k in range(7):
        assert _frac(e.coefficient(k), 0) == Fraction(1, math.factorial(k))
    half = theta.exp_x("1/2", 4, 0)
    assert _frac(half.coefficient(2), 0) == Fraction(1, 8)


def test_sinh_cosh_parity_and_leading_terms():
    s = theta.two_sinh_half(7, 2)
    c = theta.cosh_half(6, 2)
    assert s.is_odd() and c.is_even()
    assert _frac(s.coefficient(1), 0) == 1
    assert _frac(s.coefficient(3), 0) == Fraction(1, 24)
    assert _frac(c.coefficient(0), 0) == 1
    assert _frac(c.coefficient(2), 0) == Fraction(1, 8)


def test_phi_is_odd_with_leading_x():
    p = theta.phi(7, 10)
    assert p.is_odd()
    assert p.coefficient(0).is_zero()
    assert p.coefficient(1).is_one()


def test_psi1_is_even_with_unit_constant():
    p = theta.psi(ThetaKind.THETA1, 6, 10)
    assert p.is_even()
    assert p.coefficient(0).is_one()


def test_psi23_even_unit():
    for kind in (ThetaKind.THETA2, ThetaKind.THETA3):
        p = theta.psi(kind, 6, 10)
        assert p.is_even()
        assert p.coefficient(0).is_one()
    with pytest.raises(ValueError):
        theta.psi(ThetaKind.THETA, 4, 4)


def test_x_over_phi_inverts_phi():
    xo, qo = 6, 10
    u = theta.x_over_phi(xo, qo)
    p = theta.phi(xo + 1, qo)
    prod = UniSeries(p.coeffs[1:], xo, qo) * u
    assert prod == UniSeries.one(xo, qo)


def test_x_over_phi_x2_coefficient_is_weight2_shape():
    # [x^2] x/Phi = -1/24 + sum sigma_1(n) q^(2n)
    qo = 20
    c2 = theta.x_over_phi(4, qo).coefficient(2)
    assert _frac(c2, 0) == Fraction(-1, 24)
    sigma1 = {1: 1, 2: 3, 3: 4, 4: 7, 5: 6, 6: 12, 7: 8, 8: 15, 9: 13, 10: 18}
    for n, v in sigma1.items():
        assert _frac(c2, 2 * n) == v
    assert c2.even_q_support()


def test_psi_product_x2_coefficient():
    # [x^2] Psi1*Psi2*Psi3 = 1/8 - 3 * sum sigma_1(n) q^(2n)
    qo = 20
    c2 = theta.psi_product(4, qo).coefficient(2)
    assert _frac(c2, 0) == Fraction(1, 8)
    for n in range(1, 11):
        s1 = sum(d for d in range(1, n + 1) if n % d == 0)
        assert _frac(c2, 2 * n) == -3 * s1


def test_jacobi_identity_and_mutated_control():
    assert theta.jacobi_check(50)
    # dropping one Euler factor breaks the identity
    assert not theta.jacobi_check(50, skip=1)


def test_numeric_theta_rejects_lower_half_plane():
    with pytest.raises(ValueError):
        theta.numeric_theta(ThetaKind.THETA, 0.1, 0.2 - 1j)


def test_numeric_transform_suite_passes():
    rep = theta.numeric_transform_suite()
    assert rep["passed"]
    assert all(e < 1e-9 for e in rep["errors"].values())


def test_numeric_transform_suite_rejects_low_im_tau():
    with pytest.raises(ValueError):
        theta.numeric_transform_suite(samples=[(0.1 + 0.1j, 0.5 + 0.5j)])


def test_numeric_matches_series_at_sample_point():
    # Phi as a truncated series in x approximates theta(z)/ (theta'(0)/(2 pi i))
    tau = 1.7j
    z = 0.05 + 0.02j
    import cmath
    x = 2j * math.pi * z
    qo, xo = 40, 15
    p = theta.phi(xo, qo)
    qv = cmath.exp(1j * math.pi * tau)
    val = 0
    for k in range(xo, -1, -1):
        ck = sum(float(Fraction(str(p.coefficient(k).coefficient(m))))
                 * qv ** m for m in range(qo + 1))
        val = val * x + ck
    num = theta.numeric_theta(ThetaKind.THETA, z, tau)
    den = theta.numeric_theta(ThetaKind.THETA, 1e-7, tau) / (2j * math.pi * 1e-7)
    assert abs(val - num / den) < 1e-5
