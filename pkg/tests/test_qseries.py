"""Unit tests for the exact truncated q-series scalar layer."""

import random
from fractions import Fraction

import pytest

from wittenq.errors import NonIntegralError, NonUnitError, OrderMismatchError
from wittenq.qseries import Q2Series, QSeries, rat


def _random_series(rng, order, int_only=False):
    coeffs = []
    for _ in range(order + 1):
        num = rng.randint(-9, 9)
        den = 1 if int_only else rng.randint(1, 7)
        coeffs.append(Fraction(num, den))
    return QSeries(coeffs, order)


def test_construction_pads_and_truncates():
    s = QSeries([1, 2], 4)
    assert s.coeffs == [rat(1), rat(2), rat(0), rat(0), rat(0)]
    t = QSeries([1, 2, 3, 4, 5], 2)
    assert t.coeffs == [rat(1), rat(2), rat(3)]
    assert QSeries([7]).order == 0


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        QSeries([0.5], 3)
    with pytest.raises(TypeError):
        QSeries([1], 3) * 0.5


def test_string_and_fraction_coercion():
    s = QSeries(["1/3", Fraction(2, 5)], 1)
    assert s.coefficient(0) == Fraction(1, 3)
    assert s.coefficient(1) == Fraction(2, 5)


def test_basic_predicates():
    assert QSeries.zero(5).is_zero()
    assert QSeries.one(5).is_one()
    assert QSeries.one(5).is_unit()
    assert not QSeries.monomial(1, 3, 5).is_unit()
    assert QSeries([1, 0, 2], 2).is_integral()
    assert not QSeries(["1/2"], 2).is_integral()
    assert QSeries([1, 0, 5, 0], 3).even_q_support()
    assert not QSeries([1, 1], 3).even_q_support()


def test_monomial_beyond_order_is_zero():
    assert QSeries.monomial(3, 9, 5).is_zero()


def test_add_sub_neg():
    a = QSeries([1, 2, 3], 2)
    b = QSeries([4, 5, 6], 2)
    assert (a + b).coeffs == [rat(5), rat(7), rat(9)]
    assert (b - a).coeffs == [rat(3), rat(3), rat(3)]
    assert (-a + a).is_zero()
    assert (a + 1).coefficient(0) == 2
    assert (1 + a).coefficient(0) == 2
    assert (1 - a).coefficient(0) == 0


def test_order_mismatch_raises():
    with pytest.raises(OrderMismatchError):
        QSeries.one(3) + QSeries.one(4)
    with pytest.raises(OrderMismatchError):
        QSeries.one(3) * QSeries.one(4)


def test_mul_against_double_loop_oracle():
    rng = random.Random(101)
    for _ in range(20):
        order = rng.randint(0, 12)
        a = _random_series(rng, order)
        b = _random_series(rng, order)
        prod = a * b
        for k in range(order + 1):
            expect = sum((Fraction(str(a.coefficient(i)))
                          * Fraction(str(b.coefficient(k - i)))
                          for i in range(k + 1)), Fraction(0))
            assert prod.coefficient(k) == expect


def test_scalar_mul_both_sides():
    a = QSeries([1, 2, 3], 2)
    assert (a * 2).coeffs == [rat(2), rat(4), rat(6)]
    assert (2 * a).coeffs == [rat(2), rat(4), rat(6)]
    assert (a * Fraction(1, 2)).coefficient(1) == 1


def test_pow_matches_repeated_mul():
    rng = random.Random(202)
    a = _random_series(rng, 8)
    acc = QSeries.one(8)
    for k in range(5):
        assert a ** k == acc
        acc = acc * a


def test_inv_unit_roundtrip():
    rng = random.Random(303)
    for _ in range(10):
        a = _random_series(rng, 10)
        if not a.is_unit():
            a = a + 1
        if not a.is_unit():
            continue
        assert (a * a.inv_unit()).is_one()
    geom = QSeries([1, -1], 6).inv_unit()
    assert geom.coeffs == [rat(1)] * 7  # 1/(1-q) = 1 + q + q^2 + ...


def test_inv_unit_requires_unit():
    with pytest.raises(NonUnitError):
        QSeries.monomial(1, 1, 4).inv_unit()


def test_negative_power_uses_inverse():
    a = QSeries([1, 1], 5)
    assert a ** -1 == a.inv_unit()
    assert (a ** -2) * a * a == QSeries.one(5)


def test_truncate():
    a = QSeries([1, 2, 3, 4], 3)
    assert a.truncate(1).coeffs == [rat(1), rat(2)]
    with pytest.raises(ValueError):
        a.truncate(9)


def test_reduce_mod2():
    a = QSeries([5, -3, 4, 0], 3)
    r = a.reduce_mod2()
    assert isinstance(r, Q2Series)
    assert r.bits == [1, 1, 0, 0]
    with pytest.raises(NonIntegralError):
        QSeries(["1/2"], 2).reduce_mod2()


def test_reduce_mod2_negative_odd_is_one():
    assert QSeries([-7], 0).reduce_mod2().bits == [1]


def test_q2series_equality_and_zero():
    a = QSeries([2, 4, 6], 2).reduce_mod2()
    assert a.is_zero()
    b = QSeries([1], 2).reduce_mod2()
    assert a != b
    assert b == QSeries([3], 2).reduce_mod2()


def test_equality_with_constants():
    assert QSeries.constant(5, 3) == 5
    assert QSeries([5, 1], 3) != 5


def test_hash_consistency():
    a = QSeries([1, 2], 4)
    b = QSeries([1, 2, 0], 4)
    assert a == b and hash(a) == hash(b)


def test_ring_axioms_randomized():
    rng = random.Random(404)
    for _ in range(15):
        order = rng.randint(1, 9)
        a = _random_series(rng, order)
        b = _random_series(rng, order)
        c = _random_series(rng, order)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
