"""Exact moments of the Gaussian weight.

Two families are computed here:

* half-line moments ``M_k[alpha, b] = int_0^b x^k exp(-alpha^2 x^2) dx``
* interval moments ``w_k = int_{-1}^{1} x^k exp(-alpha^2 (x - beta)^2) dx``

The interval moments are binomial combinations of half-line moments.  The
half-line moments use closed forms in ``erf`` and ``exp``; for small
``alpha*b`` those forms subtract two nearly equal numbers, so a positive
power series of the lower incomplete gamma function is used instead.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .specfun import ERF_SATURATION, SQRT_PI, erf, erfc, half_integer_gamma

#: Largest moment degree accepted unless the caller raises it.
DEGREE_CAP = 40
#: |1 + beta| below this is treated as beta == -1.
BETA_MINUS_ONE_TOL = 1e-12

_SERIES_EPS = Fraction(1, 10**18)


@dataclass(frozen=True)
class GaussianWeight:
    """The weight ``exp(-alpha^2 (x - beta)^2)``."""

    alpha: float
    beta: float = 0.0

    def __post_init__(self):
        if not (self.alpha > 0 and math.isfinite(self.alpha)):
            raise DomainError(f"alpha must be positive and finite, got {self.alpha!r}")
        if not math.isfinite(self.beta):
            raise DomainError(f"beta must be finite, got {self.beta!r}")

    @property
    def c0(self) -> float:
        """Standard deviation of the Gaussian."""
        return 1.0 / (math.sqrt(2.0) * self.alpha)

    @classmethod
    def from_std(cls, c0: float, beta: float = 0.0) -> "GaussianWeight":
        return cls(1.0 / (math.sqrt(2.0) * c0), beta)

    def __call__(self, x: float) -> float:
        d = self.alpha * (x - self.beta)
        return math.exp(-d * d)

    def reflected(self) -> "GaussianWeight":
        return GaussianWeight(self.alpha, -self.beta)


@dataclass(frozen=True)
class MomentVector:
    weight: GaussianWeight
    values: tuple[float, ...]

    @property
    def k_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> float:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


def _check(k: int, alpha: float, b: float, cap: int) -> None:
    if k < 0 or k > cap:
        raise DomainError(f"moment degree {k} outside [0, {cap}]")
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    if not b > 0:
        raise DomainError(f"upper limit b must be positive, got {b!r}")


def _use_series(k: int, u: float) -> bool:
    # 1 - Q(a, u) cancels badly when u is below the gamma shape a = (k+1)/2
    return u < 0.5 * (k + 1) + 1.0


def _series(k: int, alpha: float, b: float) -> float:
    # M_k = b^(k+1) e^(-u) / 2 * sum_n u^n / (a (a+1) ... (a+n)),  a = (k+1)/2
    # The sum is accumulated in exact rationals so that only exp(-u) and the
    # final product round.
    u = (alpha * b) ** 2
    uq = Fraction(u)
    a2 = k + 1  # 2a, keeps the denominators integral
    term = Fraction(2, a2)
    total = term
    n = 0
    while True:
        n += 1
        term = term * uq * 2 / (a2 + 2 * n)
        total += term
        if term <= total * _SERIES_EPS:
            break
    return float(total * Fraction(b) ** (k + 1) / 2 * Fraction(math.exp(-u)))


def _odd_closed(k: int, alpha: float, b: float) -> float:
    j = (k - 1) // 2
    u = (alpha * b) ** 2
    jf = math.factorial(j)
    e = math.exp(-u)
    lead = 0.5 * jf * -math.expm1(-u) * alpha ** (-2 - 2 * j)
    tail = math.fsum(b ** (2 * l) * alpha ** (-2 - 2 * j + 2 * l) / math.factorial(l) for l in range(1, j + 1))
    return lead - 0.5 * jf * e * tail


def _even_double_sum(j: int, alpha: float, b: float) -> float:
    # the finite correction term of the even closed form (without its sign)
    u = (alpha * b) ** 2
    e = math.exp(-u)
    if e == 0.0:
        return 0.0
    jf = math.factorial(j)
    terms = []
    for l in range(1, j + 1):
        g_jl = half_integer_gamma(j - l)
        for i in range(l):
            num = jf * half_integer_gamma(l - i - 1) * g_jl * b ** (2 * i + 1)
            den = math.factorial(j - l) * math.factorial(l - i - 1) * math.factorial(i) * l
            terms.append(num / den * alpha ** (-2 * j + 2 * i))
    return math.fsum(terms) * e / (2.0 * math.pi)


def _erf_saturated(z: float) -> float:
    return 1.0 if z > ERF_SATURATION else erf(z)


def _even_closed(k: int, alpha: float, b: float) -> float:
    j = k // 2
    lead = 0.5 * half_integer_gamma(j) * _erf_saturated(b * alpha) * alpha ** (-1 - 2 * j)
    return lead - _even_double_sum(j, alpha, b)


def moment_full(k: int, alpha: float) -> float:
    """``int_0^inf x^k exp(-alpha^2 x^2) dx = Gamma((k+1)/2) / (2 alpha^(k+1))``."""
    if k % 2:
        return 0.5 * math.factorial((k - 1) // 2) * alpha ** (-k - 1)
    return 0.5 * half_integer_gamma(k // 2) * alpha ** (-k - 1)


def moment_tail(k: int, alpha: float, b: float) -> float:
    """``int_b^inf x^k exp(-alpha^2 x^2) dx``, accurate when ``alpha*b`` is large."""
    u = (alpha * b) ** 2
    if _use_series(k, u):
        return moment_full(k, alpha) - _series(k, alpha, b)
    if k % 2:
        j = (k - 1) // 2
        e = math.exp(-u)
        s = math.fsum(b ** (2 * l) * alpha ** (-2 - 2 * j + 2 * l) / math.factorial(l) for l in range(0, j + 1))
        return 0.5 * math.factorial(j) * e * s
    j = k // 2
    z = alpha * b
    lead = 0.0 if z > ERF_SATURATION else 0.5 * half_integer_gamma(j) * erfc(z) * alpha ** (-1 - 2 * j)
    return lead + _even_double_sum(j, alpha, b)


def moment_base(j: int, alpha: float, b: float, cap: int = DEGREE_CAP) -> float:
    """Half-line moment ``M_j[alpha, b]``."""
    _check(j, alpha, b, cap)
    if _use_series(j, (alpha * b) ** 2):
        return _series(j, alpha, b)
    if j % 2:
        return _odd_closed(j, alpha, b)
    return _even_closed(j, alpha, b)


def moment_between(j: int, alpha: float, lo: float, hi: float, cap: int = DEGREE_CAP) -> float:
    """``int_lo^hi x^j exp(-alpha^2 x^2) dx`` for ``0 < lo < hi`` without cancellation."""
    _check(j, alpha, hi, cap)
    if not 0 < lo < hi:
        raise DomainError(f"need 0 < lo < hi, got lo={lo!r}, hi={hi!r}")
    if _use_series(j, (alpha * lo) ** 2):
        return moment_base(j, alpha, hi, cap) - _series(j, alpha, lo)
    return moment_tail(j, alpha, lo) - moment_tail(j, alpha, hi)


def moment_recurrence_oracle(j: int, alpha: float, b: float, cap: int = DEGREE_CAP, dps: int = 50) -> float:
    """``M_j[alpha, b]`` by integration by parts, in extended precision.

    ``M_j = ((j-1) M_{j-2} - b^(j-1) exp(-alpha^2 b^2)) / (2 alpha^2)``.
    The upward recurrence amplifies rounding by about ``j!! / (2 alpha^2)^(j/2)``,
    hence the working precision of ``dps`` digits.  Test-only.
    """
    _check(j, alpha, b, cap)
    import mpmath

    with mpmath.workdps(dps):
        a = mpmath.mpf(alpha)
        bb = mpmath.mpf(b)
        e = mpmath.exp(-(a * bb) ** 2)
        m0 = mpmath.sqrt(mpmath.pi) * mpmath.erf(bb * a) / (2 * a)
        m1 = (1 - e) / (2 * a * a)
        ms = [m0, m1]
        for i in range(2, j + 1):
            ms.append(((i - 1) * ms[i - 2] - bb ** (i - 1) * e) / (2 * a * a))
        return float(ms[j])


def binomial_row(k: int) -> list[float]:
    """Row ``k`` of Pascal's triangle as floats (exact for k <= 40)."""
    row = [1.0]
    for _ in range(k):
        row = [1.0] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1.0]
    return row


def weight_moments(weight: GaussianWeight, k_max: int, cap: int = DEGREE_CAP) -> MomentVector:
    """Moments ``w_0 .. w_kmax`` of ``weight`` over [-1, 1]; requires beta <= 0."""
    alpha, beta = weight.alpha, weight.beta
    if beta > 0:
        raise DomainError(f"weight_moments needs beta <= 0 (got {beta!r}); build for -beta and use reflect_moments")
    if k_max < 0 or k_max > cap:
        raise DomainError(f"k_max={k_max} outside [0, {cap}]")

    if abs(1.0 + beta) < BETA_MINUS_ONE_TOL:
        parts = [moment_base(j, alpha, 2.0, cap) for j in range(k_max + 1)]
        shift = -1.0
    elif beta > -1.0:
        hi = [moment_base(j, alpha, 1.0 - beta, cap) for j in range(k_max + 1)]
        lo = [moment_base(j, alpha, 1.0 + beta, cap) for j in range(k_max + 1)]
        parts = [hi[j] + (lo[j] if j % 2 == 0 else -lo[j]) for j in range(k_max + 1)]
        shift = beta
    else:
        parts = [moment_between(j, alpha, -1.0 - beta, 1.0 - beta, cap) for j in range(k_max + 1)]
        shift = beta

    values = []
    for k in range(k_max + 1):
        row = binomial_row(k)
        values.append(math.fsum(row[j] * shift ** (k - j) * parts[j] for j in range(k + 1)))
    return MomentVector(weight, tuple(values))


def reflect_moments(vec: MomentVector) -> MomentVector:
    """Moments for ``(alpha, -beta)`` from moments for ``(alpha, beta)``."""
    vals = tuple(v if k % 2 == 0 else -v for k, v in enumerate(vec.values))
    return MomentVector(vec.weight.reflected(), vals)


def moments_any_beta(weight: GaussianWeight, k_max: int, cap: int = DEGREE_CAP) -> MomentVector:
    """:func:`weight_moments` for any sign of beta, reflecting when beta > 0."""
    if weight.beta > 0:
        return reflect_moments(weight_moments(weight.reflected(), k_max, cap))
    return weight_moments(weight, k_max, cap)
