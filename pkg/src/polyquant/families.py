"""Classical families the variate touches, and the nearest-family labeling.

The shape parameter walks through named territory: uniform-like for large s,
roughly triangular near 1.6, exactly exponential at 1, exactly inverse-beta
(beta prime with both parameters 1) at 0, and GEV-like heavy tails for large
negative s via xi = 1-s, sigma = gamma(2-s), mu = gamma(1-s).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .numerics import gamma_real

__all__ = [
    "GevParams",
    "FamilyBands",
    "FamilyLabel",
    "FAMILY_NAMES",
    "exponential_quantile",
    "inverse_beta11_cdf",
    "gev_params_from_s",
    "gev_quantile",
    "tukey_lambda_quantile",
    "nearest_named_family",
]

FAMILY_UNIFORM = "uniform_approx"
FAMILY_TRIANGULAR = "triangular_approx"
FAMILY_EXPONENTIAL = "exponential"
FAMILY_INVERSE_BETA = "inverse_beta"
FAMILY_GEV = "gev_heavy_tail"
FAMILY_INTERMEDIATE = "intermediate"

FAMILY_NAMES = frozenset(
    {
        FAMILY_UNIFORM,
        FAMILY_TRIANGULAR,
        FAMILY_EXPONENTIAL,
        FAMILY_INVERSE_BETA,
        FAMILY_GEV,
        FAMILY_INTERMEDIATE,
    }
)


@dataclass(frozen=True)
class GevParams:
    mu: float
    sigma: float
    xi: float

    def __post_init__(self):
        if not self.sigma > 0.0:
            raise DomainError("sigma must be positive")
        if not self.xi > 0.0:
            raise DomainError("xi must be positive")


@dataclass(frozen=True)
class FamilyLabel:
    name: str
    s_anchor: float


@dataclass(frozen=True)
class FamilyBands:
    """Half-widths / cutoffs for the nearest-family bands.

    Only the anchors are given in the source material; the bands are a
    labeling convention and deliberately configurable.
    """

    uniform_min: float = 10.0
    triangular_center: float = 1.6
    triangular_halfwidth: float = 0.2
    exponential_halfwidth: float = 0.05
    inverse_beta_halfwidth: float = 0.05
    gev_max: float = -2.0


DEFAULT_BANDS = FamilyBands()


def exponential_quantile(p: float, rate: float = 1.0) -> float:
    """-ln(1-p)/rate; +inf at p = 1."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must lie in [0, 1], got {p!r}")
    if not rate > 0.0:
        raise DomainError("rate must be positive")
    if p == 1.0:
        return math.inf
    return -math.log1p(-p) / rate


def inverse_beta11_cdf(x: float) -> float:
    """CDF x/(1+x) of the inverse beta (beta prime) with both parameters 1."""
    x = float(x)
    if math.isnan(x) or x < 0.0:
        raise DomainError(f"x must be non-negative, got {x!r}")
    return x / (1.0 + x)


def gev_params_from_s(s: float) -> GevParams:
    """GEV parameters matching the heavy tail of shape s < 1."""
    s = float(s)
    if not s < 1.0:
        raise DomainError(f"the GEV mapping requires s < 1 (xi > 0), got {s}")
    return GevParams(mu=gamma_real(1.0 - s), sigma=gamma_real(2.0 - s), xi=1.0 - s)


def gev_quantile(p: float, params: GevParams) -> float:
    """mu + (sigma/xi) * ((-ln p)^(-xi) - 1) on the open interval."""
    p = float(p)
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must lie strictly inside (0, 1), got {p!r}")
    return params.mu + params.sigma / params.xi * (
        (-math.log(p)) ** (-params.xi) - 1.0
    )


def tukey_lambda_quantile(p: float, lam: float) -> float:
    """Tukey lambda quantile; the lam = 0 branch is the logit."""
    p = float(p)
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must lie strictly inside (0, 1), got {p!r}")
    if lam == 0.0:
        return math.log(p / (1.0 - p))
    return (p**lam - (1.0 - p) ** lam) / lam


def nearest_named_family(s: float, bands: FamilyBands | None = None) -> FamilyLabel:
    """Label the named family nearest to shape s.

    Anchor conventions: approximate bands carry their canonical anchor
    (10, 1.6, 1, 0, or the -2 cutoff); the intermediate label anchors at
    s itself.
    """
    bands = bands or DEFAULT_BANDS
    s = float(s)
    if s >= bands.uniform_min:
        return FamilyLabel(FAMILY_UNIFORM, bands.uniform_min)
    if abs(s - bands.triangular_center) <= bands.triangular_halfwidth:
        return FamilyLabel(FAMILY_TRIANGULAR, bands.triangular_center)
    if abs(s - 1.0) <= bands.exponential_halfwidth:
        return FamilyLabel(FAMILY_EXPONENTIAL, 1.0)
    if abs(s) <= bands.inverse_beta_halfwidth:
        return FamilyLabel(FAMILY_INVERSE_BETA, 0.0)
    if s <= bands.gev_max:
        return FamilyLabel(FAMILY_GEV, bands.gev_max)
    return FamilyLabel(FAMILY_INTERMEDIATE, s)
