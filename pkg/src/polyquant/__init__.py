"""polyquant: the non-negative distribution whose quantile is Li_s(p).

A library plus CLI for the random variate defined by taking the
polylogarithm as quantile function: numerically sound evaluation of the
kernel, quantile/CDF/PDF/moments/sampling, relationships to classical
families, and PPCC-based shape fitting.
"""

from .distribution import MomentResult, PolyDist, Support, moment_is_finite
from .errors import (
    AccuracyError,
    BracketError,
    ConvergenceError,
    DegenerateDataError,
    DomainError,
    PolyquantError,
    QuadratureAccuracyError,
    QuadratureDivergenceError,
    QuadratureError,
    UnsupportedOrderError,
)
from .families import (
    FamilyBands,
    FamilyLabel,
    GevParams,
    exponential_quantile,
    gev_params_from_s,
    gev_quantile,
    inverse_beta11_cdf,
    nearest_named_family,
    tukey_lambda_quantile,
)
from .numerics import (
    QuadConfig,
    RootConfig,
    find_root_monotone,
    gamma_real,
    integrate_unit_interval,
)
from .polylog import (
    CLOSED_FORM_ORDERS,
    EvalOptions,
    PolylogValue,
    polylog,
    polylog_closed_form,
    polylog_derivative,
    polylog_near_one,
    polylog_series,
    zeta,
)
from .ppcc import PpccProfile, fit_shape, plotting_positions, ppcc

__version__ = "0.1.0"

__all__ = [
    "PolyDist",
    "Support",
    "MomentResult",
    "moment_is_finite",
    "EvalOptions",
    "PolylogValue",
    "CLOSED_FORM_ORDERS",
    "polylog",
    "polylog_series",
    "polylog_closed_form",
    "polylog_near_one",
    "polylog_derivative",
    "zeta",
    "RootConfig",
    "QuadConfig",
    "find_root_monotone",
    "integrate_unit_interval",
    "gamma_real",
    "GevParams",
    "FamilyBands",
    "FamilyLabel",
    "exponential_quantile",
    "inverse_beta11_cdf",
    "gev_params_from_s",
    "gev_quantile",
    "tukey_lambda_quantile",
    "nearest_named_family",
    "PpccProfile",
    "plotting_positions",
    "ppcc",
    "fit_shape",
    "PolyquantError",
    "DomainError",
    "UnsupportedOrderError",
    "AccuracyError",
    "BracketError",
    "ConvergenceError",
    "QuadratureError",
    "QuadratureDivergenceError",
    "QuadratureAccuracyError",
    "DegenerateDataError",
]
