"""Scalar special functions used by the moment formulas and diagnostics.

``erf``/``erfc`` delegate to the C library through :mod:`math`, which is
accurate to about one ulp on IEEE doubles.  Everything else is short
enough to write out.
"""
from __future__ import annotations

import math

from .errors import DomainError

SQRT_PI = math.sqrt(math.pi)

#: Largest j accepted by :func:`half_integer_gamma` unless overridden.
GAMMA_CAP = 64
#: Largest n with n! finite in double precision.
FACTORIAL_CAP = 170

# Above this argument erfc underflows; erf is exactly 1 in double precision.
ERF_SATURATION = 38.0


def erf(x: float) -> float:
    if x != x or math.isinf(x):
        raise DomainError(f"erf requires a finite argument, got {x!r}")
    if x < 0.0:
        return -math.erf(-x)
    return math.erf(x)


def erfc(x: float) -> float:
    if x != x or math.isinf(x):
        raise DomainError(f"erfc requires a finite argument, got {x!r}")
    return math.erfc(x)


def half_integer_gamma(j: int, cap: int = GAMMA_CAP) -> float:
    """Gamma(1/2 + j) by upward recurrence from sqrt(pi)."""
    if j < 0 or j > cap:
        raise DomainError(f"half_integer_gamma: j={j} outside [0, {cap}]")
    g = SQRT_PI
    for i in range(j):
        g *= 0.5 + i
    return g


def half_integer_gamma_table(jmax: int, cap: int = GAMMA_CAP) -> list[float]:
    """Entries Gamma(1/2 + j) for j = 0..jmax, each from the previous one."""
    if jmax < 0 or jmax > cap:
        raise DomainError(f"half_integer_gamma_table: jmax={jmax} outside [0, {cap}]")
    values = [SQRT_PI]
    for i in range(jmax):
        values.append(values[-1] * (0.5 + i))
    return values


def factorial(n: int) -> float:
    if n < 0 or n > FACTORIAL_CAP:
        raise DomainError(f"factorial: n={n} outside [0, {FACTORIAL_CAP}]")
    return float(math.factorial(n))


def double_factorial(n: int) -> float:
    """n!! with the convention (-1)!! = 0!! = 1."""
    if n < -1 or n > 2 * FACTORIAL_CAP:
        raise DomainError(f"double_factorial: n={n} out of range")
    out = 1
    for k in range(n, 0, -2):
        out *= k
    return float(out)


def hermite_number(m: int) -> float:
    """H_m(0): zero for odd m, (-1)^(m/2) 2^(m/2) (m-1)!! for even m."""
    if m < 0:
        raise DomainError(f"hermite_number: m={m} must be nonnegative")
    if m % 2:
        return 0.0
    half = m // 2
    return (-1.0) ** half * 2.0**half * double_factorial(m - 1)


def hermite_eval(m: int, t: float) -> float:
    """Physicists' Hermite polynomial H_m(t) by the three-term recurrence.

    Overflow is reported as an infinite value of the right sign.
    """
    if m < 0 or m > 256:
        raise DomainError(f"hermite_eval: m={m} outside [0, 256]")
    if m == 0:
        return 1.0
    prev, cur = 1.0, 2.0 * t
    for k in range(1, m):
        prev, cur = cur, 2.0 * t * cur - 2.0 * k * prev
        if not math.isfinite(cur):
            return _overflow_sign(m, t)
    return cur


def _overflow_sign(m: int, t: float) -> float:
    # leading term 2^m t^m dominates once |t| is large enough to overflow
    if t < 0 and m % 2:
        return -math.inf
    return math.inf


def gaussian(alpha: float, x: float, beta: float = 0.0) -> float:
    d = alpha * (x - beta)
    return math.exp(-d * d)


def gaussian_derivative(m: int, alpha: float, x: float) -> float:
    """m-th derivative of exp(-alpha^2 x^2) at x."""
    if not alpha > 0:
        raise DomainError(f"gaussian_derivative: alpha={alpha} must be positive")
    g = gaussian(alpha, x)
    if g == 0.0:
        return 0.0
    h = hermite_eval(m, alpha * x)
    scale = alpha**m
    if math.isinf(h) or math.isinf(scale):
        # the product may still be finite; fall back to logarithms
        if h == 0.0:
            return 0.0
        log_mag = m * math.log(alpha) + _log_abs_hermite(m, alpha * x) - (alpha * x) ** 2
        sign = -1.0 if (m % 2) else 1.0
        sign *= math.copysign(1.0, h)
        return sign * math.exp(log_mag) if log_mag < 709.0 else sign * math.inf
    out = scale * h * g
    return -out if m % 2 else out


def _log_abs_hermite(m: int, t: float) -> float:
    # recurrence on rescaled values, tracking the exponent separately
    prev, cur, log_scale = 1.0, 2.0 * t, 0.0
    for k in range(1, m):
        prev, cur = cur, 2.0 * t * cur - 2.0 * k * prev
        big = max(abs(prev), abs(cur))
        if big > 1e150:
            prev /= big
            cur /= big
            log_scale += math.log(big)
    return log_scale + math.log(abs(cur)) if cur != 0.0 else -math.inf
