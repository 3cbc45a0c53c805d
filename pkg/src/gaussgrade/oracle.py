"""Adaptive reference integrator used to validate the quadrature schemes.

Globally adaptive bisection: every panel is integrated with a 10-point and
a 21-point Gauss-Legendre rule, the difference serving as the local error
estimate, and the worst panel is split until the summed estimate falls
below ``tol * |result|``.  It shares no code with the moment-based rules.
"""
from __future__ import annotations

import heapq
import math

import numpy as np

from .errors import DomainError, OracleError
from .moments import GaussianWeight

_LOW = tuple(tuple(map(float, a)) for a in np.polynomial.legendre.leggauss(10))
_HIGH = tuple(tuple(map(float, a)) for a in np.polynomial.legendre.leggauss(21))

MIN_TOL = 1e-14


def _gl(g, a: float, b: float, rule) -> float:
    x, w = rule
    c, r = 0.5 * (a + b), 0.5 * (b - a)
    return r * math.fsum(wi * g(c + r * xi) for xi, wi in zip(x, w))


def _panel(g, a, b):
    hi = _gl(g, a, b, _HIGH)
    lo = _gl(g, a, b, _LOW)
    return hi, abs(hi - lo)


def _seed_points(weight: GaussianWeight, a: float, b: float) -> list[float]:
    # panels of width ~1/alpha around the peak, so a narrow bump is not missed
    pts = {a, b}
    for k in (0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0):
        for s in (-1.0, 1.0):
            x = weight.beta + s * k / weight.alpha
            if a < x < b:
                pts.add(x)
    return sorted(pts)


def adaptive_oracle(f, weight: GaussianWeight, tol: float = 1e-14, a: float = -1.0, b: float = 1.0,
                    max_panels: int = 20000) -> float:
    """``int_a^b f(x) weight(x) dx`` to tolerance ``tol`` relative to the summed panel magnitudes."""
    if not tol >= MIN_TOL:
        raise DomainError(f"oracle tolerance must be >= {MIN_TOL}, got {tol!r}")
    if not a < b:
        raise DomainError(f"need a < b, got [{a}, {b}]")

    def g(x):
        return f(x) * weight(x)

    heap = []
    pts = _seed_points(weight, a, b)
    for lo, hi in zip(pts, pts[1:]):
        val, err = _panel(g, lo, hi)
        heapq.heappush(heap, (-err, lo, hi, val))
    while True:
        total = math.fsum(item[3] for item in heap)
        err = math.fsum(-item[0] for item in heap)
        # scale by the integral of |g| (per panel) so cancelling integrands can still stop
        scale = math.fsum(abs(item[3]) for item in heap)
        if err <= tol * scale or err <= 1e-300:
            return total
        if len(heap) >= max_panels:
            raise OracleError(
                f"oracle did not reach tol={tol} within {max_panels} panels (estimate {err:.3e}, value {total:.17e})"
            )
        _, lo, hi, _ = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            raise OracleError(f"panel [{lo!r}, {hi!r}] cannot be split further")
        for p, q in ((lo, mid), (mid, hi)):
            val, e = _panel(g, p, q)
            heapq.heappush(heap, (-e, p, q, val))
