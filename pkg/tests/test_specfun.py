import json
import math
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from gaussgrade.errors import DomainError
from gaussgrade.specfun import (
    SQRT_PI,
    double_factorial,
    erf,
    gaussian_derivative,
    half_integer_gamma,
    half_integer_gamma_table,
    hermite_eval,
    hermite_number,
)

ERF_REF = json.loads((Path(__file__).parent / "data" / "erf_reference.json").read_text())


def test_erf_examples():
    assert erf(0.0) == 0.0
    assert erf(1.0) == pytest.approx(0.84270079294971486934, rel=1e-15)
    assert abs(erf(6.0) - 1.0) <= 1e-16


@pytest.mark.parametrize("row", ERF_REF, ids=lambda r: repr(r["x"]))
def test_erf_reference(row):
    ref = float(row["erf"])
    assert abs(erf(row["x"]) - ref) <= 1e-15 * max(1.0, abs(ref)) or abs(erf(row["x"]) - ref) <= 1e-15 * abs(ref)


@given(st.floats(-8, 8))
def test_erf_odd(x):
    assert erf(-x) + erf(x) == 0.0


@given(st.lists(st.floats(-8, 8), min_size=2, max_size=50))
def test_erf_monotone(xs):
    ys = [erf(x) for x in sorted(xs)]
    assert all(a <= b for a, b in zip(ys, ys[1:]))


def test_erf_rejects_nonfinite():
    with pytest.raises(DomainError):
        erf(math.nan)


def test_half_integer_gamma_examples():
    assert half_integer_gamma(0) == SQRT_PI
    assert SQRT_PI == pytest.approx(1.7724538509055160, abs=2.3e-16)
    assert half_integer_gamma(1) == SQRT_PI / 2
    assert half_integer_gamma(3) == pytest.approx(15 * SQRT_PI / 8, rel=1e-15)
    assert half_integer_gamma(3) == pytest.approx(3.3233509704478426, rel=1e-15)


def test_half_integer_gamma_cap():
    with pytest.raises(DomainError):
        half_integer_gamma(65)
    with pytest.raises(DomainError):
        half_integer_gamma(-1)
    assert half_integer_gamma(70, cap=80) == pytest.approx(math.gamma(70.5), rel=1e-13)


def test_gamma_table_recurrence():
    vals = half_integer_gamma_table(60)
    for j in range(60):
        assert vals[j + 1] / vals[j] == pytest.approx(j + 0.5, rel=1e-15)
        assert half_integer_gamma(j + 1) / half_integer_gamma(j) == pytest.approx(j + 0.5, rel=1e-15)
    for j in (0, 5, 20, 60):
        assert vals[j] == pytest.approx(math.gamma(j + 0.5), rel=1e-13)


def test_hermite_examples():
    assert hermite_eval(0, 3.7) == 1.0
    assert hermite_eval(2, 0.0) == -2.0 == hermite_number(2)
    assert hermite_eval(3, 1.0) == -4.0


def test_hermite_numbers():
    for m in range(0, 40, 2):
        assert hermite_eval(m, 0.0) == pytest.approx(hermite_number(m), rel=1e-14)
    assert hermite_number(6) == -8 * double_factorial(5) == -120.0
    assert hermite_number(7) == 0.0


def _hermite_closed(m, t):
    # exact: H_m(t) = m! sum_k (-1)^k (2t)^(m-2k) / (k! (m-2k)!)
    t = Fraction(t)
    terms = [Fraction((-1) ** k * math.factorial(m), math.factorial(k) * math.factorial(m - 2 * k)) * (2 * t) ** (m - 2 * k)
             for k in range(m // 2 + 1)]
    return sum(terms), sum(abs(x) for x in terms)


@given(st.integers(0, 30), st.floats(-5, 5))
def test_hermite_matches_closed_form(m, t):
    exact, scale = _hermite_closed(m, t)
    # relative to the size of the expansion terms; exact zeros make pointwise relative error meaningless
    assert abs(Fraction(hermite_eval(m, t)) - exact) <= Fraction(1, 10**10) * max(abs(exact), scale * Fraction(1, 10**5))


def test_hermite_overflow_is_infinite():
    assert hermite_eval(256, 1e300) == math.inf
    assert hermite_eval(255, -1e300) == -math.inf


def test_gaussian_derivative_examples():
    assert gaussian_derivative(0, 50.0, 0.02) == pytest.approx(math.exp(-1.0), rel=1e-15)
    assert gaussian_derivative(1, 2.0, 0.5) == pytest.approx(-4.0 * math.exp(-1.0), rel=1e-15)
    for m in (0, 2, 10, 30, 50):
        assert gaussian_derivative(m, 50.0, 0.0) == pytest.approx(50.0**m * hermite_number(m), rel=1e-13)


def test_gaussian_derivative_finite_difference():
    h = 1e-5
    for m in (1, 2, 5):
        x = 0.013
        fd = (gaussian_derivative(m - 1, 50.0, x + h) - gaussian_derivative(m - 1, 50.0, x - h)) / (2 * h)
        assert gaussian_derivative(m, 50.0, x) == pytest.approx(fd, rel=1e-5)
