import math

import pytest
from hypothesis import given, strategies as st

from gaussgrade.baseline import UniformRule, composite_simpson, composite_trapezoid
from gaussgrade.errors import DomainError
from gaussgrade.references import INTEGRANDS, REFERENCES
from gaussgrade.specfun import SQRT_PI


def weighted(label, alpha):
    f = INTEGRANDS[label]
    return lambda x: f(x) * math.exp(-((alpha * x) ** 2))


def gauss_exact(alpha):
    return SQRT_PI * math.erf(alpha) / (2 * alpha)


@given(st.integers(1, 200), st.floats(-5, 5), st.floats(-5, 5))
def test_trapezoid_exact_on_linears(n, a, b):
    assert composite_trapezoid(lambda x: a * x + b, n) == pytest.approx(a / 2 + b, abs=1e-14)


def test_trapezoid_examples():
    assert composite_trapezoid(lambda x: x, 7) == 0.5
    assert composite_trapezoid(lambda x: x * x, 2) == 0.375


@given(st.integers(1, 200), st.lists(st.floats(-3, 3), min_size=4, max_size=4))
def test_simpson_exact_on_cubics(n, c):
    g = lambda x: c[0] + c[1] * x + c[2] * x**2 + c[3] * x**3
    exact = c[0] + c[1] / 2 + c[2] / 3 + c[3] / 4
    assert composite_simpson(g, n) == pytest.approx(exact, abs=1e-14)


def test_simpson_interval_and_count():
    assert composite_simpson(lambda x: x**3, 3, 1.0, 2.0) == pytest.approx(3.75, abs=1e-14)
    calls = []
    composite_simpson(lambda x: calls.append(x) or 0.0, 10)
    assert len(set(calls)) == 21
    assert UniformRule("simpson", 10).node_count == 21
    assert UniformRule("trapezoid", 10).node_count == 11


def test_rule_object():
    g = math.exp
    assert UniformRule("trapezoid", 9)(g) == composite_trapezoid(g, 9)
    assert UniformRule("simpson", 9)(g) == composite_simpson(g, 9)
    with pytest.raises(DomainError):
        UniformRule("boole", 4)
    with pytest.raises(DomainError):
        composite_trapezoid(g, 0)


def test_trapezoid_narrow_gaussian_poisson():
    # with alpha*h = 1 Poisson summation gives RE = 2 sum_k exp(-pi^2 k^2) (tail at x = 1 negligible)
    g = lambda x: math.exp(-((100.0 * x) ** 2))
    re = abs(composite_trapezoid(g, 100) - gauss_exact(100.0)) / gauss_exact(100.0)
    poisson = 2 * math.fsum(math.exp(-((math.pi * k) ** 2)) for k in range(1, 5))
    assert re == pytest.approx(poisson, rel=1e-9)


@pytest.mark.parametrize("alpha", [1e3, 1e4])
def test_trapezoid_fails_for_narrow_gaussian(alpha):
    g = lambda x: math.exp(-((alpha * x) ** 2))
    re = abs(composite_trapezoid(g, 100) - gauss_exact(alpha)) / gauss_exact(alpha)
    assert re >= 1e-1


def test_trapezoid_error_grows_with_alpha():
    res = []
    for alpha in (100.0, 1e3, 1e4):
        g = lambda x, a=alpha: math.exp(-((a * x) ** 2))
        res.append(abs(composite_trapezoid(g, 100) - gauss_exact(alpha)) / gauss_exact(alpha))
    assert res == sorted(res)


def test_simpson_table_values():
    # uniform-mesh relative errors quoted to three digits
    re = lambda label, alpha, n: abs(composite_simpson(weighted(label, alpha), n) - REFERENCES[label].exact(alpha)) / REFERENCES[label].exact(alpha)
    assert re("x2", 40.0, 20) == pytest.approx(2.21e-1, abs=1e-2)
    assert re("expx2", 30.0, 7) == pytest.approx(1.61e-1, abs=1e-2)
