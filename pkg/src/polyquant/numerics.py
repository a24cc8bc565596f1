"""Generic numeric machinery: bracketed root finding, quadrature, gamma.

Nothing in here knows about the polylogarithm; the distribution layer wires
these against the kernel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import (
    BracketError,
    ConvergenceError,
    DomainError,
    QuadratureAccuracyError,
    QuadratureDivergenceError,
)

__all__ = [
    "RootConfig",
    "QuadConfig",
    "find_root_monotone",
    "integrate_unit_interval",
    "gamma_real",
]


@dataclass(frozen=True)
class RootConfig:
    abs_tol: float = 1e-12
    max_iter: int = 200

    def __post_init__(self):
        if not self.abs_tol > 0.0:
            raise DomainError("abs_tol must be positive")
        if self.max_iter < 1:
            raise DomainError("max_iter must be at least 1")


@dataclass(frozen=True)
class QuadConfig:
    rel_tol: float = 1e-9
    max_levels: int = 12

    def __post_init__(self):
        if not self.rel_tol > 0.0:
            raise DomainError("rel_tol must be positive")
        if self.max_levels < 1:
            raise DomainError("max_levels must be at least 1")


DEFAULT_ROOT = RootConfig()
DEFAULT_QUAD = QuadConfig()


def find_root_monotone(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    cfg: RootConfig | None = None,
    *,
    hint: float | None = None,
    f_lo: float | None = None,
    f_hi: float | None = None,
) -> float:
    """Root of a nondecreasing f on [lo, hi] with f(lo) <= 0 <= f(hi).

    Bisection with a secant acceleration step, deterministic, tolerant of
    infinite function values at the endpoints (they participate only as
    signs).  ``hint`` collapses the bracket with one extra evaluation;
    ``f_lo``/``f_hi`` can pass along endpoint values that are already known.

    Returns the bracket midpoint once the bracket is narrower than abs_tol,
    or an exact zero if one is hit.
    """
    cfg = cfg or DEFAULT_ROOT
    if not lo < hi:
        raise BracketError(f"empty bracket [{lo}, {hi}]")
    fa = f(lo) if f_lo is None else f_lo
    fb = f(hi) if f_hi is None else f_hi
    if math.isnan(fa) or math.isnan(fb):
        raise BracketError("function value is NaN at a bracket endpoint")
    if fa == 0.0:
        return lo
    if fb == 0.0:
        return hi
    if fa > 0.0 or fb < 0.0:
        raise BracketError(
            f"root not bracketed: f({lo})={fa}, f({hi})={fb}"
        )
    a, b = float(lo), float(hi)

    if hint is not None and a < hint < b:
        fh = f(hint)
        if fh == 0.0:
            return hint
        if fh > 0.0:
            b, fb = hint, fh
        else:
            a, fa = hint, fh

    for it in range(cfg.max_iter):
        if b - a <= cfg.abs_tol:
            return 0.5 * (a + b)
        mid = 0.5 * (a + b)
        x = mid
        # secant through the bracket, used when finite and it actually lands
        # strictly inside; every third step falls back to pure bisection so
        # a stalling secant cannot spoil convergence
        if it % 3 != 2 and math.isfinite(fa) and math.isfinite(fb) and fb > fa:
            xs = a - fa * (b - a) / (fb - fa)
            margin = 0.01 * (b - a)
            if a + margin < xs < b - margin:
                x = xs
        fx = f(x)
        if math.isnan(fx):
            raise ConvergenceError(f"function value is NaN at {x}")
        if fx == 0.0:
            return x
        if fx > 0.0:
            b, fb = x, fx
        else:
            a, fa = x, fx
    raise ConvergenceError(
        f"no convergence in {cfg.max_iter} iterations (bracket [{a}, {b}])"
    )


# ---------------------------------------------------------------------------
# tanh-sinh quadrature on (0, 1)
# ---------------------------------------------------------------------------

# beyond this |pi*sinh(t)| overflows exp(); nodes there are unrepresentable
_T_CAP = 6.11


def _nodes(h: float, odd_only: bool):
    """Yield (x, 1-x, weight/h) tanh-sinh nodes at multiples of h.

    The logistic form x = 1/(1 + exp(-pi*sinh t)) gives the complement
    1 - x = 1/(1 + exp(+pi*sinh t)) exactly, which is what makes endpoint
    singularities integrable in float64.
    """
    k = 1 if odd_only else 0
    step = 2 if odd_only else 1
    while k * h <= _T_CAP:
        for t in ((k * h, -k * h) if k else (0.0,)):
            y = math.pi * math.sinh(t)
            if abs(y) > 700.0:
                continue
            x = 1.0 / (1.0 + math.exp(-y))
            u = 1.0 / (1.0 + math.exp(y))
            if x == 0.0 or u == 0.0:
                continue
            yield x, u, math.pi * math.cosh(t) * x * u
        k += step


def integrate_unit_interval(
    g: Callable[..., float],
    cfg: QuadConfig | None = None,
    *,
    complement_aware: bool = False,
) -> float:
    """Integrate g over (0, 1) by level-doubling tanh-sinh quadrature.

    Handles algebraic endpoint singularities at p = 1 of exponent > -1.
    With ``complement_aware=True`` the integrand is called as ``g(p, 1-p)``
    with the complement exact to full precision; singular integrands should
    use this form, since ``1 - p`` computed from p alone loses the endpoint
    in float64 (plain-form nodes whose p rounds to exactly 0 or 1 are
    skipped, which is harmless for log-type singularities only).

    Raises QuadratureDivergenceError when samples are non-finite or level
    increments grow instead of contracting (the infinite-moment signal),
    QuadratureAccuracyError when max_levels is exhausted short of rel_tol;
    both carry the last estimate.
    """
    cfg = cfg or DEFAULT_QUAD

    def sample(x: float, u: float) -> float | None:
        try:
            if complement_aware:
                v = g(x, u)
            else:
                if x <= 0.0 or x >= 1.0:
                    return None
                v = g(x)
        except (OverflowError, ZeroDivisionError) as exc:
            raise QuadratureDivergenceError(
                f"integrand overflow near p={x!r}", estimate=None
            ) from exc
        if math.isnan(v) or math.isinf(v):
            raise QuadratureDivergenceError(
                f"non-finite integrand sample at p={x!r}", estimate=None
            )
        return v

    def sweep(h: float, odd_only: bool) -> float:
        acc = 0.0
        for x, u, w in _nodes(h, odd_only):
            v = sample(x, u)
            if v is not None:
                acc += w * v
        return acc

    h = 1.0
    raw = sweep(h, odd_only=False)
    estimate = h * raw
    prev_diff = math.inf
    for level in range(1, cfg.max_levels + 1):
        h *= 0.5
        raw += sweep(h, odd_only=True)
        cur = h * raw
        diff = abs(cur - estimate)
        estimate = cur
        if level >= 3 and diff <= cfg.rel_tol * abs(cur):
            return cur
        if (
            level >= 4
            and diff >= prev_diff
            and diff > 100.0 * cfg.rel_tol * abs(cur)
        ):
            raise QuadratureDivergenceError(
                f"level increments stopped contracting at level {level}",
                estimate=cur,
            )
        prev_diff = diff
    raise QuadratureAccuracyError(
        f"no convergence within {cfg.max_levels} levels", estimate=estimate
    )


def gamma_real(x: float) -> float:
    """Gamma function for real non-pole arguments.

    Thin wrapper over the C library implementation (Lanczos-class accuracy,
    well under the 1e-12 contract); +inf on overflow.
    """
    x = float(x)
    if x <= 0.0 and x.is_integer():
        raise DomainError(f"gamma pole at {x}")
    try:
        return math.gamma(x)
    except ValueError as exc:  # pragma: no cover - pole check above
        raise DomainError(str(exc)) from exc
    except OverflowError:
        return math.inf
