import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from gaussgrade.errors import DomainError
from gaussgrade.moments import (
    GaussianWeight,
    MomentVector,
    binomial_row,
    moment_base,
    moment_between,
    moment_recurrence_oracle,
    moments_any_beta,
    reflect_moments,
    weight_moments,
)
from gaussgrade.specfun import SQRT_PI

# 40-digit mpmath quadrature of the defining integrals
M5_1_1 = 0.080301397071394196011
W_2_M15_3 = -0.044524597279289670873
W_3_P04 = [0.58759518572710064601, 0.23286230355365086271, 0.12361332524360121292,
           0.073143148643990074219, 0.04768370716883150823, 0.033151745162341001869,
           0.024330399115802651645]


def mp_w(alpha, beta, k):
    with mpmath.workdps(40):
        pts = [-1, beta, 1] if -1 < beta < 1 else [-1, 1]
        return float(mpmath.quad(lambda x: x**k * mpmath.exp(-(alpha * (x - beta)) ** 2), pts))


def test_weight_type():
    w = GaussianWeight(50.0, -0.3)
    assert w.c0 * w.alpha * math.sqrt(2) == pytest.approx(1.0, rel=1e-15)
    assert GaussianWeight.from_std(w.c0).alpha == pytest.approx(50.0, rel=1e-15)
    with pytest.raises(DomainError):
        GaussianWeight(0.0)
    with pytest.raises(DomainError):
        GaussianWeight(-1.0)


@pytest.mark.parametrize("alpha,b", [(0.5, 0.5), (1.0, 1.0), (7.0, 0.3), (50.0, 2.0), (500.0, 3.0)])
def test_base_cases(alpha, b):
    assert moment_base(0, alpha, b) == pytest.approx(SQRT_PI * math.erf(b * alpha) / (2 * alpha), rel=1e-14)
    assert moment_base(1, alpha, b) == pytest.approx(-math.expm1(-(b * alpha) ** 2) / (2 * alpha**2), rel=1e-14)
    assert moment_recurrence_oracle(0, alpha, b) == pytest.approx(moment_base(0, alpha, b), rel=1e-15)


def test_m5():
    assert moment_base(5, 1.0, 1.0) == pytest.approx(M5_1_1, rel=1e-14)
    assert moment_recurrence_oracle(5, 1.0, 1.0) == pytest.approx(M5_1_1, rel=1e-15)


def test_oracle_one_step():
    m0 = SQRT_PI * math.erf(1.0) / 2
    m1 = (1 - math.exp(-1.0)) / 2
    assert moment_recurrence_oracle(2, 1.0, 1.0) == pytest.approx((m0 - math.exp(-1.0)) / 2, rel=1e-15)
    assert moment_recurrence_oracle(3, 1.0, 1.0) == pytest.approx((2 * m1 - math.exp(-1.0)) / 2, rel=1e-15)


def test_closed_form_regime_against_oracle():
    # large alpha*b exercises the erf / exp closed forms rather than the series
    for j in range(0, 21):
        for alpha, b in ((5.0, 2.0), (50.0, 0.5), (3.0, 3.0)):
            assert moment_base(j, alpha, b) == pytest.approx(moment_recurrence_oracle(j, alpha, b), rel=1e-13)


def test_moment_domain_errors():
    with pytest.raises(DomainError):
        moment_base(41, 1.0, 1.0)
    with pytest.raises(DomainError):
        moment_base(2, 0.0, 1.0)
    with pytest.raises(DomainError):
        moment_base(2, 1.0, -1.0)
    assert moment_base(45, 1.0, 1.0, cap=50) > 0


@given(st.integers(0, 19), st.sampled_from([0.5, 1.0, 5.0, 50.0, 500.0]), st.floats(0.05, 1.0))
def test_positive_and_decaying(j, alpha, b):
    a, c = moment_base(j, alpha, b), moment_base(j + 1, alpha, b)
    assert a > 0 and c > 0
    assert c < a


@pytest.mark.parametrize("j", range(7))
@pytest.mark.parametrize("b", [0.5, 1.0, 2.0])
def test_alpha_derivative_identity(j, b):
    # d/da M_j[sqrt(a), b] = -M_{j+2}[sqrt(a), b] at a = 1
    h = 1e-5
    fd = (moment_base(j, math.sqrt(1 + h), b) - moment_base(j, math.sqrt(1 - h), b)) / (2 * h)
    assert fd == pytest.approx(-moment_base(j + 2, 1.0, b), rel=1e-6)


def test_between_matches_difference():
    for j in range(12):
        for alpha, lo, hi in ((0.3, 1.0, 3.0), (2.0, 0.4, 2.4), (40.0, 1.2, 3.2)):
            ref = moment_recurrence_oracle(j, alpha, hi, dps=60) - moment_recurrence_oracle(j, alpha, lo, dps=60)
            with mpmath.workdps(40):
                ref = float(mpmath.quad(lambda x: x**j * mpmath.exp(-(alpha * x) ** 2), [lo, hi]))
            assert moment_between(j, alpha, lo, hi) == pytest.approx(ref, rel=1e-13)


def test_binomial_rows():
    for k in range(41):
        assert binomial_row(k) == [float(math.comb(k, j)) for j in range(k + 1)]


def test_weight_moments_beta_minus_one():
    for alpha in (0.7, 3.0, 40.0):
        w = weight_moments(GaussianWeight(alpha, -1.0), 0)
        assert w[0] == pytest.approx(SQRT_PI * math.erf(2 * alpha) / (2 * alpha), rel=1e-14)


def test_weight_moments_symmetric_weight():
    vec = weight_moments(GaussianWeight(4.0, 0.0), 9)
    assert vec.k_max == 9 and len(vec) == 10
    for k in range(1, 10, 2):
        assert vec[k] == 0.0
    assert vec[0] == pytest.approx(SQRT_PI * math.erf(4.0) / 4.0, rel=1e-14)


def test_weight_moments_against_quadrature():
    assert weight_moments(GaussianWeight(2.0, -1.5), 3)[3] == pytest.approx(W_2_M15_3, rel=1e-13)
    for alpha, beta in ((1.0, -0.2), (6.0, -0.999), (25.0, -1.2), (3.0, -3.0)):
        vec = weight_moments(GaussianWeight(alpha, beta), 8)
        for k in range(9):
            assert vec[k] == pytest.approx(mp_w(alpha, beta, k), rel=1e-13)


def _binomial_scale(alpha, beta, k):
    # sum of |terms| in the binomial expansion: the accuracy scale of the result
    lo, hi = -1.0 - beta, 1.0 - beta
    parts = [moment_between(j, alpha, lo, hi) for j in range(k + 1)]
    return sum(math.comb(k, j) * abs(beta) ** (k - j) * abs(parts[j]) for j in range(k + 1))


def test_weight_moments_ill_conditioned_expansion():
    # small alpha with |beta| well past 1: the expansion cancels, error tracks eps * sum|terms|
    for alpha, beta in ((0.3, -4.0), (0.089, -12.2)):
        vec = weight_moments(GaussianWeight(alpha, beta), 8)
        for k in range(9):
            assert abs(vec[k] - mp_w(alpha, beta, k)) <= 1e-14 * _binomial_scale(alpha, beta, k)


def test_weight_moments_positive_beta_rejected():
    with pytest.raises(DomainError, match="reflect"):
        weight_moments(GaussianWeight(1.0, 0.2), 3)
    with pytest.raises(DomainError):
        weight_moments(GaussianWeight(1.0, -0.2), 41)


def test_reflect():
    base = weight_moments(GaussianWeight(3.0, -0.4), 6)
    ref = reflect_moments(base)
    assert ref.weight == GaussianWeight(3.0, 0.4)
    assert ref[0] == base[0]
    assert ref[1] == -base[1]
    for k in range(7):
        assert ref[k] == pytest.approx(W_3_P04[k], rel=1e-14)
    assert moments_any_beta(GaussianWeight(3.0, 0.4), 6) == ref


@given(st.floats(0.5, 500.0), st.floats(-6.0, 0.0), st.integers(0, 20))
def test_moment_bound(alpha, beta, k):
    vec = weight_moments(GaussianWeight(alpha, beta), k)
    assert all(math.isfinite(v) for v in vec.values)
    assert all(abs(v) <= SQRT_PI / alpha + 1e-15 for v in vec.values)


def test_vector_is_immutable():
    vec = weight_moments(GaussianWeight(2.0, -0.5), 3)
    assert isinstance(vec, MomentVector)
    with pytest.raises(Exception):
        vec.values = ()
