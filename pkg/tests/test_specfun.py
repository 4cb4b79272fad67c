"""Dilogarithm, Clausen function, and periodic Bernoulli polynomial tests.

Oracles are coded independently of the implementation: the raw power
series for Li2 inside the unit disk, the period-6 block form of the
Clausen sine series at pi/3, and exact functional equations (inversion,
Landen, reflection, duplication). Frozen constants carry more digits than
double precision can hold.
"""

import cmath
import math
import random

import numpy as np
import pytest

from olim41.errors import DomainError
from olim41.specfun import (
    bernoulli2_periodic,
    clausen2,
    dilog,
    dilog_unit_circle_decomposition,
    principal_log,
)

PI = math.pi
CATALAN = 0.9159655941772190150546035149324
CL2_PI_3 = 1.0149416064096536250212025542745


def _dilog_power_series(z, terms=3000):
    total = 0j
    term = complex(z)
    for n in range(1, terms + 1):
        total += term / (n * n)
        term *= z
    return total


def _clausen_pi3_block_series(blocks=400_000):
    # Cl2(pi/3) = (sqrt(3)/2) sum_k [(6k+1)^-2 + (6k+2)^-2 - (6k+4)^-2 - (6k+5)^-2];
    # the bracket decays like k^-3, so the tail after 4e5 blocks is ~2e-13.
    a = 6.0 * np.arange(blocks, dtype=np.float64)
    s = 1 / (a + 1) ** 2 + 1 / (a + 2) ** 2 - 1 / (a + 4) ** 2 - 1 / (a + 5) ** 2
    return math.sqrt(3.0) / 2.0 * float(np.sum(s))


class TestPrincipalLog:
    def test_negative_axis_takes_lower_edge(self):
        assert principal_log(-1) == complex(0.0, -PI)
        assert principal_log(complex(-2.0, 0.0)) == complex(math.log(2.0), -PI)
        assert principal_log(complex(-2.0, -0.0)) == complex(math.log(2.0), -PI)

    def test_matches_stdlib_off_axis(self):
        rng = random.Random(7)
        for _ in range(200):
            z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            if abs(z) < 1e-6 or (z.imag == 0 and z.real < 0):
                continue
            assert principal_log(z) == cmath.log(z)

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            principal_log(0)
        with pytest.raises(DomainError):
            principal_log(0j)


class TestDilog:
    def test_known_values(self):
        assert dilog(0) == 0j
        assert abs(dilog(1) - PI * PI / 6) < 1e-15
        assert abs(dilog(-1) + PI * PI / 12) < 1e-15
        assert abs(dilog(0.5) - (PI * PI / 12 - math.log(2) ** 2 / 2)) < 1e-15
        assert abs(dilog(1j) - complex(-PI * PI / 48, CATALAN)) < 1e-14

    def test_against_power_series(self):
        rng = random.Random(11)
        worst = 0.0
        for _ in range(200):
            z = cmath.rect(rng.uniform(0.05, 0.85), rng.uniform(-PI, PI))
            worst = max(worst, abs(dilog(z) - _dilog_power_series(z)))
        assert worst < 1e-13

    def test_cut_values(self):
        # values on [1, oo) are the limit with Im Li2(x) = +pi ln(x)
        for x in (1.5, 2.0, 3.0, 7.5):
            assert abs(dilog(x).imag - PI * math.log(x)) < 1e-12
        assert abs(dilog(2.0) - complex(PI * PI / 4, PI * math.log(2))) < 1e-13

    def test_conjugation_symmetry_off_cut(self):
        rng = random.Random(13)
        for _ in range(200):
            z = complex(rng.uniform(-3, 3), rng.uniform(0.05, 3))
            assert abs(dilog(z.conjugate()) - dilog(z).conjugate()) < 1e-12

    def test_inversion_identity(self):
        rng = random.Random(17)
        count = 0
        worst = 0.0
        while count < 1000:
            z = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
            if abs(z) < 0.05 or (abs(z.imag) < 1e-3 and z.real > -1e-3):
                continue  # the identity needs z off [0, oo)
            lg = principal_log(-z)
            worst = max(worst, abs(dilog(z) + dilog(1 / z)
                                   + PI * PI / 6 + 0.5 * lg * lg))
            count += 1
        assert worst < 1e-11

    def test_landen_identity(self):
        rng = random.Random(19)
        count = 0
        worst = 0.0
        while count < 1000:
            z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            if abs(1 - z) < 0.05 or (abs(z.imag) < 1e-3 and z.real > 1 - 1e-3):
                continue  # z in [1, oo) sits on the cut
            lg = principal_log(1 - z)
            worst = max(worst, abs(dilog(z) + dilog(z / (z - 1)) + 0.5 * lg * lg))
            count += 1
        assert worst < 1e-11

    def test_reflection_identity(self):
        rng = random.Random(23)
        for _ in range(300):
            z = complex(rng.uniform(0.05, 0.95), rng.uniform(-0.5, 0.5))
            if min(abs(z), abs(1 - z)) < 0.05 or abs(z.imag) < 1e-6:
                continue
            lhs = dilog(z) + dilog(1 - z)
            rhs = PI * PI / 6 - principal_log(z) * principal_log(1 - z)
            assert abs(lhs - rhs) < 1e-12

    def test_non_finite_rejected(self):
        with pytest.raises(DomainError):
            dilog(complex(math.nan, 0.0))
        with pytest.raises(DomainError):
            dilog(complex(0.0, math.inf))


class TestClausen:
    def test_maximum_against_sine_series(self):
        assert abs(clausen2(PI / 3) - _clausen_pi3_block_series()) < 2e-12

    def test_maximum_pinned(self):
        assert abs(clausen2(PI / 3) - CL2_PI_3) < 5e-15

    def test_zeros(self):
        assert clausen2(0.0) == 0.0
        assert abs(clausen2(PI)) < 1e-15
        assert abs(clausen2(2 * PI)) < 1e-15

    def test_odd_and_periodic(self):
        rng = random.Random(29)
        for _ in range(100):
            t = rng.uniform(-6, 6)
            assert abs(clausen2(-t) + clausen2(t)) < 1e-13
            assert abs(clausen2(t + 2 * PI) - clausen2(t)) < 1e-12

    def test_duplication(self):
        for t in (0.3, 0.7, 1.1, 2.0, 2.9):
            lhs = clausen2(2 * t)
            rhs = 2 * clausen2(t) - 2 * clausen2(PI - t)
            assert abs(lhs - rhs) < 1e-12

    def test_matches_dilog_on_circle(self):
        for k in range(1, 50):
            t = 2 * PI * k / 50
            assert abs(dilog(cmath.exp(1j * t)).imag - clausen2(t)) < 1e-12

    def test_non_finite_rejected(self):
        with pytest.raises(DomainError):
            clausen2(math.inf)


class TestBernoulli2:
    def test_values(self):
        assert abs(bernoulli2_periodic(0.0) - 1 / 6) < 1e-15
        assert abs(bernoulli2_periodic(0.5) + 1 / 12) < 1e-15
        assert abs(bernoulli2_periodic(1.0) - 1 / 6) < 1e-15
        assert abs(bernoulli2_periodic(0.25) + 0.020833333333333333) < 1e-15

    def test_periodic_and_even(self):
        rng = random.Random(31)
        for _ in range(100):
            x = rng.uniform(-3, 3)
            assert abs(bernoulli2_periodic(x + 1) - bernoulli2_periodic(x)) < 1e-12
            assert abs(bernoulli2_periodic(-x) - bernoulli2_periodic(x)) < 1e-12

    def test_non_finite_rejected(self):
        with pytest.raises(DomainError):
            bernoulli2_periodic(math.nan)


class TestUnitCircleDecomposition:
    def test_components_match_dilog(self):
        worst = 0.0
        for k in range(360):
            theta = 2 * PI * k / 360
            re, im = dilog_unit_circle_decomposition(theta)
            value = dilog(cmath.exp(1j * theta))
            worst = max(worst, abs(value.real - re), abs(value.imag - im))
        assert worst < 1e-10

    def test_real_part_is_bernoulli(self):
        re, im = dilog_unit_circle_decomposition(0.0)
        assert abs(re - PI * PI / 6) < 1e-15
        assert im == 0.0
        re, im = dilog_unit_circle_decomposition(PI)
        assert abs(re + PI * PI / 12) < 1e-15
