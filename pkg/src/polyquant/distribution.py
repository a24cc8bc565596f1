"""The polylog-quantile random variate.

The law is defined by its quantile function Q(p) = loc + scale * Li_s(p),
so the quantile is exact, the CDF is a monotone inversion, the PDF comes
from the derivative identity, and simulation is inverse-transform.  Support
is [loc, loc + scale*zeta(s)] for s > 1 and [loc, inf) otherwise; the m-th
moment is finite exactly when s > 1 - 1/m (the boundary itself is treated
as infinite, matching the log-divergence of the moment integral there).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .errors import DomainError, QuadratureError
from .numerics import (
    QuadConfig,
    RootConfig,
    find_root_monotone,
    integrate_unit_interval,
)
from .polylog import (
    NEAR_ONE_SWITCH,
    EvalOptions,
    _near_one_shift,
    _polylog_many,
    polylog,
    zeta,
)

__all__ = ["PolyDist", "Support", "MomentResult", "moment_is_finite"]

METHOD_SERIES = "series"
METHOD_RECURRENCE = "recurrence"
METHOD_QUADRATURE = "quadrature"
METHOD_CLOSED_FORM = "closed_form"

#: Shape above which the expectation series converges fast enough directly;
#: below it the recurrence E[Y_s] = zeta(s+1) - E[Y_{s+1}] is applied upward.
_LADDER_TOP = 30.0


@dataclass(frozen=True)
class Support:
    lower: float
    upper: float  # math.inf when s <= 1


@dataclass(frozen=True)
class MomentResult:
    order: int
    value: float  # math.inf marks a divergent moment
    method: str

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.value)


def moment_is_finite(s: float, m: int) -> bool:
    """Whether the m-th moment exists: true iff s > 1 - 1/m.

    At s = 1 - 1/m exactly the moment integrand behaves like 1/(1-p), which
    is log-divergent, so the boundary counts as infinite.
    """
    if not float(m).is_integer() or m < 1:
        raise DomainError(f"moment order must be a positive integer, got {m!r}")
    return float(s) > 1.0 - 1.0 / int(m)


@dataclass(frozen=True)
class PolyDist:
    """Shape s plus an affine location/scale wrapper.

    All intrinsic formulas operate on the standardized variate Z (loc=0,
    scale=1); X = loc + scale*Z is applied last.  Instances are immutable
    and every query is pure, so values can be shared freely across threads.
    """

    s: float
    loc: float = 0.0
    scale: float = 1.0

    def __post_init__(self):
        if not self.scale > 0.0:
            raise DomainError(f"scale must be positive, got {self.scale!r}")

    # -- support ------------------------------------------------------

    def support(self) -> Support:
        if self.s > 1.0:
            return Support(self.loc, self.loc + self.scale * zeta(self.s))
        return Support(self.loc, math.inf)

    # -- quantile / cdf / pdf ------------------------------------------

    def quantile(self, p, opts: EvalOptions | None = None):
        """Q(p) = loc + scale * Li_s(p); accepts a scalar or an array.

        p = 1 maps to the upper support bound (inf for s <= 1).
        """
        if np.ndim(p) == 0:
            pp = float(p)
            if math.isnan(pp) or not 0.0 <= pp <= 1.0:
                raise DomainError(f"p must lie in [0, 1], got {p!r}")
            return self.loc + self.scale * polylog(self.s, pp, opts).value
        vals = _polylog_many(self.s, np.asarray(p, dtype=np.float64), opts)
        return self.loc + self.scale * vals

    def cdf(
        self,
        x: float,
        opts: EvalOptions | None = None,
        root: RootConfig | None = None,
    ) -> float:
        """F(x) by monotone inversion of the quantile; total on the reals."""
        xs = (float(x) - self.loc) / self.scale
        if math.isnan(xs):
            raise DomainError("x must not be NaN")
        if xs <= 0.0:
            return 0.0
        if self.s > 1.0 and xs >= zeta(self.s):
            return 1.0
        opts = opts or EvalOptions()
        hi, li_hi = _bracket_top(self.s, opts.rel_tol, opts.max_terms)
        if xs >= li_hi:
            # beyond the largest float-invertible quantile; error <= 1 - hi
            return hi
        if self.s <= 1.0:
            hint = -math.expm1(-xs)
        else:
            hint = xs / zeta(self.s)
        hint = min(max(hint, 1e-300), hi * (1.0 - 1e-12))
        return find_root_monotone(
            lambda p: polylog(self.s, p, opts).value - xs,
            0.0,
            hi,
            root,
            hint=hint,
            f_lo=-xs,
            f_hi=li_hi - xs,
        )

    def pdf(
        self,
        x: float,
        opts: EvalOptions | None = None,
        root: RootConfig | None = None,
    ) -> float:
        """f(x) = (1/scale) * p / Li_{s-1}(p) at p = F(x); 0 off support.

        The lower endpoint takes the limit value 1/scale rather than
        evaluating 0/0; densities are 1 at the origin for every shape.
        """
        xs = (float(x) - self.loc) / self.scale
        if math.isnan(xs):
            raise DomainError("x must not be NaN")
        if xs < 0.0:
            return 0.0
        if xs == 0.0:
            return 1.0 / self.scale
        if self.s > 1.0:
            top = zeta(self.s)
            if xs > top:
                return 0.0
            if xs == top:
                if self.s > 2.0:
                    return 1.0 / (self.scale * zeta(self.s - 1.0))
                return 0.0
        p = self.cdf(x, opts, root)
        den = polylog(self.s - 1.0, p, opts).value  # >= p, so no 0/0
        return p / (den * self.scale)

    # -- sampling ------------------------------------------------------

    def sample(self, n: int, seed: int = 0, opts: EvalOptions | None = None):
        """n inverse-transform draws Q(U_i), deterministic per seed.

        The uniform stream is numpy's default_rng (PCG64); reproducibility
        per seed is within this implementation, not across libraries.
        """
        if not float(n).is_integer() or n < 0:
            raise DomainError(f"sample count must be a non-negative integer, got {n!r}")
        rng = np.random.default_rng(seed)
        u = rng.random(int(n))
        return self.loc + self.scale * _polylog_many(self.s, u, opts)

    def median(self, opts: EvalOptions | None = None) -> float:
        return self.quantile(0.5, opts)

    # -- moments -------------------------------------------------------

    def mean(self, opts: EvalOptions | None = None) -> MomentResult:
        """E[X]; infinite for s <= 0.

        The standardized expectation sum_k 1/(k^s (k+1)) converges too
        slowly near s = 0, so the recurrence E[Y_s] = zeta(s+1) - E[Y_{s+1}]
        is applied upward until the shape is large, where a short direct sum
        finishes the job.
        """
        if self.s <= 0.0:
            return MomentResult(1, math.inf, METHOD_CLOSED_FORM)
        val, method = _std_mean(self.s)
        return MomentResult(1, self.loc + self.scale * val, method)

    def moment(
        self,
        m: int,
        opts: EvalOptions | None = None,
        quad: QuadConfig | None = None,
    ) -> MomentResult:
        """Raw moment E[X^m]; the finiteness predicate gates the quadrature.

        Affine parameters enter through the binomial expansion over the
        standardized moments (all of lower order, hence also finite).
        """
        if not float(m).is_integer() or m < 1:
            raise DomainError(f"moment order must be a positive integer, got {m!r}")
        m = int(m)
        if not moment_is_finite(self.s, m):
            return MomentResult(m, math.inf, METHOD_CLOSED_FORM)
        if m == 1:
            return self.mean(opts)
        opts = opts or EvalOptions()
        if self.loc == 0.0:
            val = self.scale**m * _std_moment(self.s, m, opts, quad)
            return MomentResult(m, val, METHOD_QUADRATURE)
        std = {0: 1.0, 1: _std_mean(self.s)[0]}
        for j in range(2, m + 1):
            std[j] = _std_moment(self.s, j, opts, quad)
        val = sum(
            comb(m, j) * self.loc ** (m - j) * self.scale**j * std[j]
            for j in range(m + 1)
        )
        return MomentResult(m, val, METHOD_QUADRATURE)

    def variance(
        self,
        opts: EvalOptions | None = None,
        quad: QuadConfig | None = None,
    ) -> MomentResult:
        """Var[X] = scale^2 * (E[Z^2] - E[Z]^2); infinite for s <= 1/2."""
        if not moment_is_finite(self.s, 2):
            return MomentResult(2, math.inf, METHOD_CLOSED_FORM)
        opts = opts or EvalOptions()
        m2 = _std_moment(self.s, 2, opts, quad)
        mu = _std_mean(self.s)[0]
        return MomentResult(2, self.scale**2 * (m2 - mu * mu), METHOD_QUADRATURE)


# ---------------------------------------------------------------------------
# standardized internals
# ---------------------------------------------------------------------------

@lru_cache(maxsize=512)
def _bracket_top(s: float, rel_tol: float, max_terms: int) -> tuple[float, float]:
    """Largest usable CDF bracket endpoint and the kernel value there.

    Integer shapes above 1 have no near-one escape (gamma pole), so the
    bracket is capped where the series still converges within its cap; the
    CDF is then exact only up to that sliver (width 1e-6 in p).
    """
    opts = EvalOptions(rel_tol=rel_tol, max_terms=max_terms)
    if s > 1.0 and float(s).is_integer():
        hi = 1.0 - 1e-6
    else:
        hi = 1.0 - 2.0**-52
    return hi, polylog(s, hi, opts).value


def _std_mean(s: float) -> tuple[float, str]:
    """Standardized expectation for s > 0, with the method tag."""
    depth = 0
    t = float(s)
    while t < _LADDER_TOP:
        t += 1.0
        depth += 1
    k = np.arange(1.0, 61.0)
    val = float(np.sum(k ** (-t) / (k + 1.0)))
    for _ in range(depth):
        val = zeta(t) - val  # zeta((t-1)+1)
        t -= 1.0
    return val, (METHOD_RECURRENCE if depth else METHOD_SERIES)


def _std_moment(
    s: float, m: int, opts: EvalOptions, quad: QuadConfig | None
) -> float:
    """E[Z^m] = integral of Li_s(p)^m over (0,1), for predicate-finite m >= 2.

    The integrable endpoint singularity at p = 1 is where the kernel series
    is unaffordable, so the integral is split at the kernel's near-one
    switch: quadrature handles [0, 1-u0] (mapped smoothly onto (0,1)) and
    the last sliver is integrated in closed form from the same shifted
    expansion the kernel uses there (for non-integer shapes), or bounded by
    a trapezoid between Li_s(1-u0) and zeta(s) (integer shapes above 1,
    which have no expansion).  The closed-form tail diverges exactly when
    the finiteness theorem says it should.
    """
    quad = quad or QuadConfig()
    s = float(s)
    if s == 1.0:
        return integrate_unit_interval(
            lambda p, u: (-math.log(u)) ** m, quad, complement_aware=True
        )

    u0 = 1.0 - NEAR_ONE_SWITCH
    pc = NEAR_ONE_SWITCH
    try:
        body = integrate_unit_interval(
            lambda t: polylog(s, pc * t, opts).value ** m, quad
        )
    except QuadratureError as exc:
        if exc.estimate is None:
            raise
        warnings.warn(
            f"moment quadrature did not fully converge at s={s}, m={m}; "
            "returning its last estimate (the finiteness theorem says this "
            "moment is finite)",
            stacklevel=2,
        )
        body = exc.estimate

    if s.is_integer() and s > 1.0:
        li_cap = polylog(s, pc, opts).value
        top = zeta(s)
        return pc * body + u0 * (li_cap**m + top**m) / 2.0

    # model the kernel tail as A*u^(s-1) + C with continuity at u0
    a = math.gamma(1.0 - s)
    shift, _ = _near_one_shift(s, opts.rel_tol, opts.max_terms)
    c = a * ((-math.log(pc)) ** (s - 1.0) - u0 ** (s - 1.0)) + shift
    tail = 0.0
    for j in range(m + 1):
        expo = j * (s - 1.0) + 1.0
        tail += comb(m, j) * a**j * c ** (m - j) * u0**expo / expo
    return pc * body + tail
