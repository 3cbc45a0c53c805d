"""Quadrature for integrals of f(x) exp(-alpha^2 x^2) over [0, 1] with large alpha."""
from .baseline import UniformRule, composite_simpson, composite_trapezoid
from .cheb_rule import (
    ChebyshevRule,
    Integrand,
    basic_rule,
    basic_rule_error_bound,
    chebyshev_coefficients,
    chebyshev_nodes,
    power_numbers,
)
from .errors import DomainError, EvaluationError, OracleError
from .graded import (
    GradedMesh,
    QuadratureReport,
    SubintervalTransform,
    graded_mesh,
    integrate_shifted,
    quade,
    quade_condition,
    quade_degrees,
    quadp,
    quadp_error_bound,
    single_interval,
)
from .moments import (
    GaussianWeight,
    MomentVector,
    moment_base,
    moment_recurrence_oracle,
    reflect_moments,
    weight_moments,
)
from .oracle import adaptive_oracle
from .specfun import erf, gaussian_derivative, half_integer_gamma, hermite_eval

__version__ = "0.1.0"
