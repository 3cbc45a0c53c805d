"""Graded meshes on [0, 1] and the composite rules built on them.

Break-points ``x_0 = 0, x_j = alpha^((j-1)/(n-1) - 1)`` cluster next to the
peak of ``exp(-alpha^2 x^2)`` at 0.  Each piece is mapped to [-1, 1] and
handled by :func:`basic_rule`.

``quadp`` uses one degree everywhere; ``quade`` raises the degree towards
the right end of the interval.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cheb_rule import _check_degree, as_integrand, coefficients_from_values, chebyshev_nodes, rule_from_coefficients
from .errors import DomainError, EvaluationError
from .moments import DEGREE_CAP, GaussianWeight, moments_any_beta

#: Default largest n for quade; n = 6 already needs degree 30.
QUADE_N_CAP = 6


class ConditionWarning(UserWarning):
    """The sufficient condition behind the exponential error bound does not hold."""


@dataclass(frozen=True)
class GradedMesh:
    alpha: float
    n: int
    breakpoints: tuple[float, ...]

    @property
    def widths(self) -> tuple[float, ...]:
        x = self.breakpoints
        return tuple(x[j] - x[j - 1] for j in range(1, len(x)))

    @property
    def eta(self) -> float:
        return max(1.0 / self.alpha, -math.expm1(-math.log(self.alpha) / (self.n - 1)))

    def transform(self, j: int) -> "SubintervalTransform":
        """Affine map of [x_{j-1}, x_j] (1-based j) onto [-1, 1]."""
        if not 1 <= j <= self.n:
            raise IndexError(j)
        lo, hi = self.breakpoints[j - 1], self.breakpoints[j]
        return SubintervalTransform(j, lo, hi, self.alpha)

    def transforms(self) -> list["SubintervalTransform"]:
        return [self.transform(j) for j in range(1, self.n + 1)]


@dataclass(frozen=True)
class SubintervalTransform:
    j: int
    left: float
    right: float
    alpha_global: float

    @property
    def h(self) -> float:
        return self.right - self.left

    @property
    def center(self) -> float:
        return 0.5 * (self.left + self.right)

    @property
    def alpha(self) -> float:
        return self.alpha_global * self.h / 2.0

    @property
    def beta(self) -> float:
        if self.left == 0.0:
            return -1.0
        return -(self.left + self.right) / self.h

    @property
    def jacobian(self) -> float:
        return self.h / 2.0

    @property
    def weight(self) -> GaussianWeight:
        return GaussianWeight(self.alpha, self.beta)

    def to_global(self, t: float) -> float:
        return self.jacobian * t + self.center

    def pullback(self, f):
        """``f_j(t) = (h/2) f(h t / 2 + center)``."""
        jac, c = self.jacobian, self.center
        return lambda t: jac * f(jac * t + c)


@dataclass
class QuadratureReport:
    value: float
    node_count: int
    per_interval: list[tuple[int, int, float]]
    scheme: str
    params: dict
    warnings: list[str] = field(default_factory=list)

    @property
    def partials(self) -> list[float]:
        return [p for _, _, p in self.per_interval]


def graded_mesh(alpha: float, n: int) -> GradedMesh:
    if not alpha > 1:
        raise DomainError(
            f"graded mesh undefined for alpha={alpha!r} <= 1; use basic rule on [0,1] directly (single_interval)"
        )
    if n < 2:
        raise DomainError(f"graded mesh needs n >= 2, got {n}")
    la = math.log(alpha)
    pts = [0.0, 1.0 / alpha]
    for j in range(2, n):
        pts.append(math.exp(-la * (n - j) / (n - 1)))
    pts.append(1.0)
    return GradedMesh(alpha, n, tuple(pts))


def quade_degrees(n: int) -> list[int]:
    """``m_j = ceil(n (n-1) / (n+1-j))`` for j = 1..n."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    return [-(-n * (n - 1) // (n + 1 - j)) for j in range(1, n + 1)]


def quade_condition(alpha: float, n: int) -> bool:
    """Whether ``(n-1)(ln(n+1+e) - 1) >= ln alpha``."""
    return (n - 1) * (math.log(n + 1 + math.e) - 1.0) >= math.log(alpha)


def _composite(f, mesh: GradedMesh, degrees: Sequence[int], cap: int) -> tuple[float, list]:
    per = []
    for tr, m in zip(mesh.transforms(), degrees):
        g = tr.pullback(f)
        values = []
        for t in chebyshev_nodes(m):
            v = float(g(t))
            if not math.isfinite(v):
                raise EvaluationError(
                    f"integrand returned {v!r} at x={tr.to_global(t)!r} (subinterval {tr.j})",
                    interval=tr.j,
                    node=tr.to_global(t),
                )
            values.append(v)
        w = moments_any_beta(tr.weight, m, cap)
        per.append((tr.j, m, rule_from_coefficients(coefficients_from_values(values), w.values)))
    # fixed left-to-right order keeps results bit-reproducible
    total = 0.0
    for _, _, part in per:
        total += part
    return total, per


def quadp(f, alpha: float, n: int, m: int, cap: int = DEGREE_CAP) -> QuadratureReport:
    """Composite rule with degree m on each of the n graded subintervals."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    _check_degree(m, cap)
    mesh = graded_mesh(alpha, n)
    value, per = _composite(as_integrand(f), mesh, [m] * n, cap)
    return QuadratureReport(value, (m + 1) * n, per, "quadp", {"alpha": alpha, "n": n, "m": m})


def quade(f, alpha: float, n: int, cap: int = DEGREE_CAP, n_cap: int = QUADE_N_CAP) -> QuadratureReport:
    """Composite rule with degrees ``quade_degrees(n)``."""
    if n > n_cap:
        raise DomainError(f"quade: n={n} exceeds the n cap {n_cap} (max degree n(n-1)={n * (n - 1)}, degree cap {cap})")
    degrees = quade_degrees(n)
    if max(degrees) > cap:
        raise DomainError(f"quade: n={n} needs degree {max(degrees)} past the degree cap {cap}")
    _check_degree(max(degrees), cap)
    mesh = graded_mesh(alpha, n)
    notes = []
    if not quade_condition(alpha, n):
        msg = f"condition (n-1)(ln(n+1+e)-1) >= ln(alpha) fails for alpha={alpha}, n={n}; error bound not guaranteed"
        notes.append(msg)
        warnings.warn(msg, ConditionWarning, stacklevel=2)
    value, per = _composite(as_integrand(f), mesh, degrees, cap)
    nodes = sum(m + 1 for m in degrees)
    return QuadratureReport(value, nodes, per, "quade", {"alpha": alpha, "n": n, "m": degrees}, notes)


def quade_node_bound(n: int) -> float:
    return n * (n - 1) * math.log(n) + n * n + n


def quadp_error_bound(alpha: float, n: int, m: int, deriv_bound: float) -> float:
    """``sqrt(pi) eta^m / (2^(2m+1) (m+1)! alpha) * sup|f^(m+1)|``."""
    eta = graded_mesh(alpha, n).eta
    return math.sqrt(math.pi) * eta**m / (2.0 ** (2 * m + 1) * math.factorial(m + 1) * alpha) * deriv_bound


def quade_error_shape(alpha: float, n: int) -> float:
    """``(n+1)^(-1/2) (2 alpha)^(-n-1)``; the true bound carries an unknown constant."""
    return (n + 1) ** -0.5 * (2.0 * alpha) ** (-n - 1)


def single_interval(f, alpha: float, m: int, beta: float = 0.0, cap: int = DEGREE_CAP) -> QuadratureReport:
    """``int_0^1 f(x) exp(-alpha^2 (x-beta)^2) dx`` with one basic rule, any alpha > 0."""
    _check_degree(m, cap)
    tr_alpha = alpha / 2.0
    tr_beta = 2.0 * beta - 1.0
    f = as_integrand(f)
    g = lambda t: 0.5 * f(0.5 * t + 0.5)
    values = [float(g(t)) for t in chebyshev_nodes(m)]
    for t, v in zip(chebyshev_nodes(m), values):
        if not math.isfinite(v):
            raise EvaluationError(f"integrand returned {v!r} at x={0.5 * t + 0.5!r}", interval=1, node=0.5 * t + 0.5)
    w = moments_any_beta(GaussianWeight(tr_alpha, tr_beta), m, cap)
    value = rule_from_coefficients(coefficients_from_values(values), w.values)
    return QuadratureReport(value, m + 1, [(1, m, value)], "single", {"alpha": alpha, "beta": beta, "m": m})


def _run_scheme(f, alpha: float, scheme: str, n: int, m: Optional[int], cap: int) -> QuadratureReport:
    if scheme == "quadp":
        if m is None:
            raise DomainError("quadp needs a degree m")
        return quadp(f, alpha, n, m, cap)
    if scheme == "quade":
        return quade(f, alpha, n, cap)
    raise DomainError(f"unknown scheme {scheme!r}")


@dataclass
class ShiftedResult:
    value: float
    left: QuadratureReport
    right: QuadratureReport


def integrate_shifted(
    f, alpha: float, beta: float, scheme: str = "quade", n: int = 5, m: Optional[int] = None, cap: int = DEGREE_CAP
) -> ShiftedResult:
    """``int_0^1 f(x) exp(-alpha^2 (x-beta)^2) dx`` for a peak inside (0, 1).

    Split at beta; each piece is rescaled to [0, 1] with the peak at 0:
    left piece ``x = beta (1 - s)`` with parameter ``alpha*beta``, right piece
    ``x = beta + (1-beta) s`` with parameter ``alpha*(1-beta)``.
    """
    if not 0.0 < beta < 1.0:
        raise DomainError(f"integrate_shifted needs beta in (0, 1), got {beta!r}; use single_interval instead")
    f = as_integrand(f)
    a_left, a_right = alpha * beta, alpha * (1.0 - beta)
    left = _run_scheme(lambda s: beta * f(beta - beta * s), a_left, scheme, n, m, cap)
    right = _run_scheme(lambda s: (1.0 - beta) * f(beta + (1.0 - beta) * s), a_right, scheme, n, m, cap)
    return ShiftedResult(left.value + right.value, left, right)
