import math
import random
from fractions import Fraction

import pytest

from cyclicavg.trigsums import (
    cosine_power_sum,
    multiple_angle_cosine_sum,
    power_reduction_coefficients,
)


def test_multiple_angle_sum_vanishes_below_n():
    assert abs(multiple_angle_cosine_sum(5, 2, 0.7)) < 1e-10
    rng = random.Random(2)
    for n in range(2, 25):
        for m in range(1, n):
            for _ in range(5):
                assert abs(multiple_angle_cosine_sum(n, m, rng.uniform(0, 7))) < 1e-9


def test_multiple_angle_sum_at_multiples_of_n():
    assert multiple_angle_cosine_sum(3, 3, 0.0) == pytest.approx(3.0)
    assert multiple_angle_cosine_sum(1, 1, 0.0) == pytest.approx(1.0)
    # n | m: the sum collapses to n*cos(m*alpha)
    assert multiple_angle_cosine_sum(4, 8, 0.3) == pytest.approx(4 * math.cos(2.4))


def test_cosine_power_sum_closed_values():
    assert cosine_power_sum(4, 2, 1.1) == pytest.approx(2.0)
    assert cosine_power_sum(5, 3, 0.456) == pytest.approx(0.0, abs=1e-10)
    rng = random.Random(4)
    for n in range(2, 25):
        for m in range(1, n):
            expected = 0.0 if m % 2 else n * math.comb(m, m // 2) / 2.0 ** m
            for _ in range(5):
                value = cosine_power_sum(n, m, rng.uniform(0, 7))
                assert abs(value - expected) < 1e-9


def test_cosine_power_sum_alpha_invariance_below_n():
    rng = random.Random(6)
    for n in range(3, 20):
        m = rng.randint(1, n - 1)
        a1, a2 = rng.uniform(0, 7), rng.uniform(0, 7)
        assert abs(cosine_power_sum(n, m, a1) - cosine_power_sum(n, m, a2)) < 1e-9


def test_cosine_power_sum_depends_on_alpha_at_n():
    # two sampled angles whose sums differ measurably, for every n up to 12
    for n in range(1, 13):
        values = [cosine_power_sum(n, n, 2 * math.pi * k / 40) for k in range(40)]
        assert max(values) - min(values) > 0.01
    # explicit instance of the dependence
    assert abs(cosine_power_sum(3, 3, 0.0) - cosine_power_sum(3, 3, 0.3)) > 0.01
    # above n the sum is alpha-dependent only when some harmonic m-2j of
    # cos^m is a multiple of n: for n=3, m=4 the harmonics are 4, 2, 0,
    # so that particular sum is still constant
    assert abs(cosine_power_sum(3, 4, 0.0) - cosine_power_sum(3, 4, 0.3)) < 1e-12
    # while m = 5 reaches harmonic 3 and varies again
    assert abs(cosine_power_sum(3, 5, 0.0) - cosine_power_sum(3, 5, 0.3)) > 0.01


def test_power_reduction_small_cases():
    assert power_reduction_coefficients(1) == [(1, Fraction(1))]
    assert sorted(power_reduction_coefficients(2)) == [
        (0, Fraction(1, 2)), (2, Fraction(1, 2))]
    assert sorted(power_reduction_coefficients(3)) == [
        (1, Fraction(3, 4)), (3, Fraction(1, 4))]


def test_power_reduction_reconstructs_cosine_powers():
    rng = random.Random(8)
    for m in range(1, 16):
        coeffs = power_reduction_coefficients(m)
        assert sum(c for _, c in coeffs) == 1  # value at theta = 0
        for _ in range(100):
            theta = rng.uniform(0, 2 * math.pi)
            value = math.fsum(float(c) * math.cos(h * theta) for h, c in coeffs)
            assert abs(value - math.cos(theta) ** m) < 1e-12
