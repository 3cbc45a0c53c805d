"""Basic rule on [-1, 1]: interpolate at Chebyshev points, integrate against the weight.

The interpolant ``p_m = c_0/2 + sum_{j>=1} c_j T_j`` is integrated exactly
by expanding each ``T_j`` in powers of x and pairing the power
coefficients with the moments of the weight.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

import mpmath

from .errors import DomainError, EvaluationError
from .moments import DEGREE_CAP, GaussianWeight, moments_any_beta


class UnstableDegreeWarning(RuntimeWarning):
    pass


@dataclass(frozen=True)
class Integrand:
    """The smooth factor f of the integrand.

    ``derivative_bound(k)`` should return a bound on sup|f^(k)| over the
    integration domain; it is only needed by the error predictors.
    """

    eval: Callable[[float], float]
    label: str = "f"
    derivative_bound: Optional[Callable[[int], float]] = field(default=None, compare=False)

    def __call__(self, x: float) -> float:
        return self.eval(x)


def as_integrand(f) -> Integrand:
    return f if isinstance(f, Integrand) else Integrand(f, getattr(f, "__name__", "f"))


@lru_cache(maxsize=None)
def chebyshev_nodes(m: int) -> tuple[float, ...]:
    """First-kind Chebyshev points ``cos((2j+1) pi / (2m+2))``, j = 0..m."""
    if m < 0:
        raise DomainError(f"m must be nonnegative, got {m}")
    # evaluated in extended precision and rounded once: the float argument
    # alone would cost more than an ulp near the centre
    with mpmath.workdps(40):
        nodes = [float(mpmath.cospi(mpmath.mpf(2 * j + 1) / (2 * m + 2))) for j in range(m + 1)]
    # enforce exact antisymmetry; the middle node of an even m is exactly 0
    for j in range((m + 1) // 2):
        nodes[m - j] = -nodes[j]
    if m % 2 == 0:
        nodes[m // 2] = 0.0
    return tuple(nodes)


@lru_cache(maxsize=None)
def power_numbers(m: int) -> tuple[tuple[float, ...], ...]:
    """Table ``A[j][k]`` with ``T_j(x) = j * sum_k A[j][k] x^(j-2k)`` for j >= 1.

    Row 0 is empty; T_0 = 1 is handled separately.
    """
    rows: list[tuple[float, ...]] = [()]
    for j in range(1, m + 1):
        row = []
        for k in range(j // 2 + 1):
            num = math.factorial(j - k - 1) * 2 ** (j - 2 * k)
            den = math.factorial(k) * math.factorial(j - 2 * k) * 2
            row.append((-1) ** k * num / den)
        rows.append(tuple(row))
    return tuple(rows)


def chebyshev_T(j: int, x: float) -> float:
    """T_j(x) by the three-term recurrence."""
    if j == 0:
        return 1.0
    prev, cur = 1.0, x
    for _ in range(1, j):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def _sample(f, m: int) -> list[float]:
    nodes = chebyshev_nodes(m)
    values = []
    for node in nodes:
        v = float(f(node))
        if not math.isfinite(v):
            raise EvaluationError(f"integrand returned {v!r} at x={node!r}", node=node)
        values.append(v)
    return values


def coefficients_from_values(values) -> list[float]:
    """Chebyshev coefficients from samples at :func:`chebyshev_nodes` (len(values)-1)."""
    m = len(values) - 1
    scale = 2.0 / (m + 1)
    coeffs = []
    for j in range(m + 1):
        # T_j at the k-th node is cos(j (2k+1) pi / (2m+2))
        terms = [values[k] * math.cos(j * (2 * k + 1) * math.pi / (2 * m + 2)) for k in range(m + 1)]
        coeffs.append(scale * math.fsum(terms))
    return coeffs


def chebyshev_coefficients(f, m: int) -> list[float]:
    """Coefficients c_0..c_m of the degree-m interpolant of f (first term halved)."""
    if m < 0:
        raise DomainError(f"m must be nonnegative, got {m}")
    return coefficients_from_values(_sample(f, m))


def chebyshev_interpolant(coeffs) -> Callable[[float], float]:
    def p(x: float) -> float:
        return 0.5 * coeffs[0] + sum(c * chebyshev_T(j, x) for j, c in enumerate(coeffs) if j)

    return p


@dataclass(frozen=True)
class ChebyshevRule:
    m: int

    def __post_init__(self):
        if self.m < 0:
            raise DomainError(f"m must be nonnegative, got {self.m}")

    @property
    def nodes(self) -> tuple[float, ...]:
        return chebyshev_nodes(self.m)

    @property
    def power_numbers(self) -> tuple[tuple[float, ...], ...]:
        return power_numbers(self.m)

    def apply(self, f, weight: GaussianWeight, cap: int = DEGREE_CAP) -> float:
        return basic_rule(f, self.m, weight, cap)


def _check_degree(m: int, cap: int) -> None:
    if m < 0:
        raise DomainError(f"m must be nonnegative, got {m}")
    if m > cap:
        raise DomainError(f"degree m={m} exceeds the degree cap {cap}")
    if m > DEGREE_CAP:
        warnings.warn(
            f"degree m={m} is past the default cap {DEGREE_CAP}; power-basis moments are unstable here",
            UnstableDegreeWarning,
            stacklevel=3,
        )


def rule_from_coefficients(coeffs, moments) -> float:
    """Pair Chebyshev coefficients with moments through the power basis."""
    A = power_numbers(len(coeffs) - 1)
    terms = [0.5 * coeffs[0] * moments[0]]
    for j in range(1, len(coeffs)):
        tj = math.fsum(a * moments[j - 2 * k] for k, a in enumerate(A[j]))
        terms.append(j * coeffs[j] * tj)
    return math.fsum(terms)


def basic_rule(f, m: int, weight: GaussianWeight, cap: int = DEGREE_CAP) -> float:
    """Approximate ``int_{-1}^{1} f(x) exp(-alpha^2 (x-beta)^2) dx`` with m+1 samples of f."""
    _check_degree(m, cap)
    coeffs = chebyshev_coefficients(f, m)
    w = moments_any_beta(weight, m, cap)
    return rule_from_coefficients(coeffs, w.values)


def basic_rule_error_bound(m: int, alpha: float, deriv_bound: float) -> float:
    """``sqrt(pi) / (2^m (m+1)! alpha) * sup|f^(m+1)|``."""
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    return math.sqrt(math.pi) / (2.0**m * math.factorial(m + 1) * alpha) * deriv_bound
