"""Built-in integrands with closed-form reference integrals over [0, 1]."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .cheb_rule import Integrand
from .specfun import SQRT_PI, erf

# Cramer: |H_k(x)| exp(-x^2/2) <= K sqrt(2^k k!)
_CRAMER = 1.086435


def _x2(x):
    return x * x


def _x2_bound(k):
    return (1.0, 2.0, 2.0)[k] if k < 3 else 0.0


def _expx2(x):
    return math.exp(-x * x)


def _expx2_bound(k):
    return _CRAMER * math.sqrt(2.0**k * math.factorial(k))


def _step(x):
    return 1.0 if x <= 0.5 else 0.5


def _one(x):
    return 1.0


INTEGRANDS = {
    "x2": Integrand(_x2, "x2", _x2_bound),
    "expx2": Integrand(_expx2, "expx2", _expx2_bound),
    "step": Integrand(_step, "step"),
    "const1": Integrand(_one, "const1", lambda k: 1.0 if k == 0 else 0.0),
}


@dataclass(frozen=True)
class ReferenceIntegral:
    label: str
    exact: Callable[[float], float]

    @property
    def integrand(self) -> Integrand:
        return INTEGRANDS[self.label]


def _exact_x2(alpha):
    return (SQRT_PI * erf(alpha) / 2.0 - alpha * math.exp(-alpha * alpha)) / (2.0 * alpha**3)


def _exact_expx2(alpha):
    s = math.sqrt(alpha * alpha + 1.0)
    return SQRT_PI * erf(s) / (2.0 * s)


def _exact_step(alpha):
    return SQRT_PI * (erf(alpha) + erf(alpha / 2.0)) / (4.0 * alpha)


def _exact_const1(alpha):
    return SQRT_PI * erf(alpha) / (2.0 * alpha)


REFERENCES = {
    "x2": ReferenceIntegral("x2", _exact_x2),
    "expx2": ReferenceIntegral("expx2", _exact_expx2),
    "step": ReferenceIntegral("step", _exact_step),
    "const1": ReferenceIntegral("const1", _exact_const1),
}


def get_integrand(label: str) -> Integrand:
    try:
        return INTEGRANDS[label]
    except KeyError:
        raise KeyError(f"unknown integrand {label!r}; choose from {sorted(INTEGRANDS)}") from None
