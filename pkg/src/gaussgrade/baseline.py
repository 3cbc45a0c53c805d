"""Equal-width composite trapezoid and Simpson rules on [0, 1]."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


def _check(n: int) -> None:
    if n < 1:
        raise DomainError(f"need at least one subinterval, got n={n}")


def composite_trapezoid(g, n: int, a: float = 0.0, b: float = 1.0) -> float:
    """Trapezoid rule on n equal subintervals (n + 1 points)."""
    _check(n)
    h = (b - a) / n
    inner = math.fsum(g(a + i * h) for i in range(1, n))
    return h * (0.5 * (g(a) + g(b)) + inner)


def composite_simpson(g, n: int, a: float = 0.0, b: float = 1.0) -> float:
    """One Simpson panel on each of n equal subintervals (2n + 1 points)."""
    _check(n)
    h = (b - a) / n
    ends = math.fsum(g(a + i * h) for i in range(1, n))
    mids = math.fsum(g(a + (i + 0.5) * h) for i in range(n))
    return h / 6.0 * (g(a) + g(b) + 2.0 * ends + 4.0 * mids)


@dataclass(frozen=True)
class UniformRule:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("trapezoid", "simpson"):
            raise DomainError(f"unknown uniform rule {self.kind!r}")
        _check(self.n)

    @property
    def node_count(self) -> int:
        return self.n + 1 if self.kind == "trapezoid" else 2 * self.n + 1

    def __call__(self, g) -> float:
        rule = composite_trapezoid if self.kind == "trapezoid" else composite_simpson
        return rule(g, self.n)
