"""Numerical evaluation of the real polylogarithm on the unit interval.

Everything here works with real order ``s`` and argument ``z`` in ``[0, 1]``,
the region where the defining sum

    Li_s(z) = sum_{k>=1} z^k / k^s

has non-negative terms and converges for every z < 1 (and for z = 1 when
s > 1, where it equals the Riemann zeta function).  Three evaluation routes
are combined:

* the defining series, with a geometric tail bound used both to terminate
  and to report the estimated error;
* exact closed forms for s in {1, 0, -1, -2, -3};
* a leading-order expansion ``gamma(1-s) * (-ln z)**(s-1)`` very close to
  z = 1, shifted by a cached constant so the kernel stays continuous and
  monotone across the branch switch.

The expansion branch is an approximation: its ``est_error`` is reported
honestly instead of promising ``rel_tol`` there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import AccuracyError, DomainError, UnsupportedOrderError

__all__ = [
    "EvalOptions",
    "PolylogValue",
    "CLOSED_FORM_ORDERS",
    "NEAR_ONE_SWITCH",
    "polylog",
    "polylog_series",
    "polylog_closed_form",
    "polylog_near_one",
    "polylog_derivative",
    "zeta",
]

#: Orders with an exact rational/log expression.
CLOSED_FORM_ORDERS = (1, 0, -1, -2, -3)

#: Arguments above this switch to the near-one expansion (when eligible).
NEAR_ONE_SWITCH = 1.0 - 1e-4

METHOD_SERIES = "series"
METHOD_CLOSED_FORM = "closed_form"
METHOD_NEAR_ONE = "near_one_expansion"

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class EvalOptions:
    """Accuracy knobs for series evaluation.

    rel_tol is a relative tolerance on the returned value; max_terms caps
    the number of series terms before giving up with an AccuracyError.
    """

    rel_tol: float = 1e-12
    max_terms: int = 10_000_000

    def __post_init__(self):
        if not self.rel_tol > 0.0:
            raise DomainError("rel_tol must be positive")
        if self.max_terms < 1:
            raise DomainError("max_terms must be at least 1")


DEFAULT_OPTIONS = EvalOptions()


@dataclass(frozen=True)
class PolylogValue:
    """An evaluated kernel value with its provenance and error estimate."""

    value: float
    method: str
    est_error: float


def _validate_z(z: float) -> float:
    z = float(z)
    if math.isnan(z) or z < 0.0 or z > 1.0:
        raise DomainError(f"z must lie in [0, 1], got {z!r}")
    return z


def _is_closed_order(s: float) -> bool:
    return float(s).is_integer() and int(s) in CLOSED_FORM_ORDERS


# ---------------------------------------------------------------------------
# defining series
# ---------------------------------------------------------------------------

def _estimate_terms(s: float, lnz: np.ndarray, rel_tol: float) -> np.ndarray:
    """A-priori estimate of the term count needed for the tail bound.

    Solves z^K * K^(-s) ~= rel_tol * (1-z) * z by fixed point; for s < 0 the
    count is also pushed past the hump of the growing terms.
    """
    target = math.log(rel_tol) + np.log(-np.expm1(lnz)) + lnz
    k = np.maximum(16.0, target / lnz)
    for _ in range(3):
        k = np.maximum(16.0, (target + s * np.log(k)) / lnz)
    if s < 0:
        k = np.maximum(k, 1.5 * (-s) / (-lnz) + 32.0)
    return k


def _series_values(
    s: float, z: np.ndarray, opts: EvalOptions
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sum the defining series elementwise.

    Returns (values, est_errors, converged).  est_error is the geometric
    tail bound (first omitted term divided by 1-z); an element is converged
    once that bound drops below rel_tol times the partial sum, past the
    term-growth hump and at least 10 terms in.
    """
    z = np.asarray(z, dtype=np.float64)
    values = np.zeros_like(z)
    errors = np.zeros_like(z)
    converged = np.ones(z.shape, dtype=bool)

    active = (z > 0.0) & (z < 1.0)
    if not active.any():
        return values, errors, converged

    zz = z[active]
    lnz = np.log(zz)
    need = np.minimum(_estimate_terms(s, lnz, opts.rel_tol), float(opts.max_terms))
    need = np.ceil(need).astype(np.int64)

    vals = np.zeros_like(zz)
    errs = np.zeros_like(zz)
    conv = np.zeros(zz.shape, dtype=bool)
    done_terms = np.zeros_like(need)

    # Past this many terms the terms are decreasing, so the geometric tail
    # bound is valid (for s >= 0 they decrease from the start).
    if s < 0:
        hump = np.maximum(10.0, 1.5 * (-s) / (-lnz))
    else:
        hump = np.full_like(zz, 10.0)

    # Bucket elements by power-of-two term count so each bucket is one
    # (or a few, memory-chunked) vectorized evaluations.
    pending = np.arange(zz.size)
    while pending.size:
        need_p = need[pending]
        bucket = 1 << np.ceil(np.log2(np.maximum(need_p, 16))).astype(np.int64)
        retry = []
        for kb in np.unique(bucket):
            idx = pending[bucket == kb]
            lo = int(done_terms[idx][0]) + 1  # same bucket => same progress
            hi = min(int(kb), opts.max_terms)
            _sum_chunked(s, lnz[idx], lo, hi, vals, idx)
            done_terms[idx] = hi
            nxt = np.exp((hi + 1) * lnz[idx] - s * math.log(hi + 1))
            bound = nxt / (1.0 - zz[idx])
            errs[idx] = bound
            ok = (bound <= opts.rel_tol * np.abs(vals[idx])) & (hi > hump[idx])
            conv[idx] = ok
            more = idx[~ok & (done_terms[idx] < opts.max_terms)]
            if more.size:
                need[more] = np.minimum(done_terms[more] * 2, opts.max_terms)
                retry.append(more)
        pending = np.concatenate(retry) if retry else np.empty(0, dtype=np.int64)

    values[active] = vals
    errors[active] = errs
    converged[active] = conv
    return values, errors, converged


def _sum_chunked(s, lnz, lo, hi, out, idx, block=1 << 22):
    """Accumulate sum_{k=lo}^{hi} exp(k*lnz - s*ln k) into out[idx]."""
    per_row = max(1, block // max(lnz.size, 1))
    k0 = lo
    while k0 <= hi:
        k1 = min(k0 + per_row - 1, hi)
        ks = np.arange(k0, k1 + 1, dtype=np.float64)
        logt = lnz[:, None] * ks[None, :] - s * np.log(ks)[None, :]
        out[idx] += np.exp(logt).sum(axis=1)
        k0 = k1 + 1


def polylog_series(s: float, z: float, opts: EvalOptions | None = None) -> PolylogValue:
    """Evaluate Li_s(z) by the defining sum alone.

    This is the reference route used to validate the closed forms and the
    near-one expansion; ``polylog`` dispatches to faster/safer branches.

    Raises AccuracyError when max_terms is exhausted before the geometric
    tail bound meets rel_tol.
    """
    opts = opts or DEFAULT_OPTIONS
    z = _validate_z(z)
    if z == 1.0:
        raise DomainError("the defining sum requires z < 1; use polylog for z = 1")
    vals, errs, conv = _series_values(s, np.array([z]), opts)
    if not conv[0]:
        raise AccuracyError(
            f"series cap {opts.max_terms} exceeded at s={s}, z={z}",
            value=float(vals[0]),
            est_error=float(errs[0]),
        )
    return PolylogValue(float(vals[0]), METHOD_SERIES, float(errs[0]))


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def _closed_form_array(n: int, z):
    if n == 1:
        return -np.log1p(-z)
    if n == 0:
        return z / (1.0 - z)
    if n == -1:
        return z / (1.0 - z) ** 2
    if n == -2:
        return z * (1.0 + z) / (1.0 - z) ** 3
    # the printed source for Li_-3 drops the middle coefficient; the series
    # oracle confirms z(1 + 4z + z^2)/(1-z)^4
    return z * (1.0 + 4.0 * z + z * z) / (1.0 - z) ** 4


def polylog_closed_form(n: int, z: float) -> float:
    """Exact value of Li_n(z) for n in {1, 0, -1, -2, -3} and 0 <= z < 1."""
    if not float(n).is_integer() or int(n) not in CLOSED_FORM_ORDERS:
        raise UnsupportedOrderError(f"no closed form for order {n!r}")
    z = _validate_z(z)
    if z == 1.0:
        raise DomainError("closed forms require z < 1")
    return float(_closed_form_array(int(n), z))


# ---------------------------------------------------------------------------
# near-one expansion
# ---------------------------------------------------------------------------

def polylog_near_one(s: float, z: float) -> float:
    """Leading-order value gamma(1-s) * (-ln z)**(s-1) for z near 1.

    Valid for any s that is not a positive integer (the gamma factor has
    poles there).  The relative error vanishes as z -> 1 for s < 1; this is
    an approximation, not a toleranced evaluation.
    """
    s = float(s)
    if s.is_integer() and s >= 1.0:
        raise DomainError(f"gamma(1-s) has a pole at s={s}")
    z = float(z)
    if not 0.99 <= z < 1.0:
        raise DomainError("the expansion is intended for 0.99 <= z < 1")
    return math.gamma(1.0 - s) * (-math.log(z)) ** (s - 1.0)


@lru_cache(maxsize=512)
def _near_one_shift(s: float, rel_tol: float, max_terms: int) -> tuple[float, float]:
    """Continuity shift for the expansion branch and its drift estimate.

    The shift C makes ``lead(z) + C`` match the series at the switch point,
    which keeps the kernel continuous and (empirically) a few orders of
    magnitude more accurate than the bare leading term.  The drift between
    two calibration points bounds, roughly, how much C itself changes as
    z -> 1; it is reported as the branch's error estimate.
    """
    opts = EvalOptions(rel_tol=rel_tol, max_terms=max_terms)
    z1 = NEAR_ONE_SWITCH
    z2 = 1.0 - 0.5e-4
    lead1 = math.gamma(1.0 - s) * (-math.log(z1)) ** (s - 1.0)
    lead2 = math.gamma(1.0 - s) * (-math.log(z2)) ** (s - 1.0)
    c1 = polylog_series(s, z1, opts).value - lead1
    c2 = polylog_series(s, z2, opts).value - lead2
    return c1, 2.0 * abs(c1 - c2)


def _near_one_eligible(s: float) -> bool:
    return not (float(s).is_integer() and s >= 1.0)


# ---------------------------------------------------------------------------
# Riemann zeta for real s > 1
# ---------------------------------------------------------------------------

_ZETA_K = 64


def zeta(s: float) -> float:
    """Riemann zeta for real s > 1, to ~1e-13 relative.

    Dirichlet series to 63 terms plus an Euler-Maclaurin tail (integral,
    half-term and three Bernoulli corrections); the bare integral correction
    alone cannot reach the tolerance for s near 1.
    """
    s = float(s)
    if not s > 1.0:
        raise DomainError(f"zeta(s) requires s > 1, got {s}")
    k = np.arange(1, _ZETA_K, dtype=np.float64)
    head = float(np.sum(k ** (-s)))
    kk = float(_ZETA_K)
    tail = kk ** (1.0 - s) / (s - 1.0) + 0.5 * kk ** (-s)
    tail += s * kk ** (-s - 1.0) / 12.0
    tail -= s * (s + 1.0) * (s + 2.0) * kk ** (-s - 3.0) / 720.0
    tail += (
        s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0)
        * kk ** (-s - 5.0) / 30240.0
    )
    return head + tail


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------

def polylog(s: float, z: float, opts: EvalOptions | None = None) -> PolylogValue:
    """Evaluate Li_s(z) for real s and z in [0, 1].

    Branches: exact closed forms for s in {1, 0, -1, -2, -3}; the defining
    series elsewhere; the shifted near-one expansion for z beyond
    ``NEAR_ONE_SWITCH`` when gamma(1-s) is finite.  z = 1 maps to zeta(s)
    for s > 1 and +inf otherwise.
    """
    opts = opts or DEFAULT_OPTIONS
    s = float(s)
    z = _validate_z(z)

    if z == 0.0:
        return PolylogValue(0.0, METHOD_SERIES, 0.0)
    if z == 1.0:
        if s > 1.0:
            v = zeta(s)
            return PolylogValue(v, METHOD_CLOSED_FORM, 1e-13 * v)
        return PolylogValue(math.inf, METHOD_CLOSED_FORM, 0.0)
    if _is_closed_order(s):
        v = float(_closed_form_array(int(s), z))
        return PolylogValue(v, METHOD_CLOSED_FORM, 4.0 * _EPS * v)
    if z > NEAR_ONE_SWITCH and _near_one_eligible(s):
        shift, drift = _near_one_shift(s, opts.rel_tol, opts.max_terms)
        lead = math.gamma(1.0 - s) * (-math.log(z)) ** (s - 1.0)
        v = lead + shift
        return PolylogValue(v, METHOD_NEAR_ONE, drift + 4.0 * _EPS * abs(v))
    return polylog_series(s, z, opts)


def polylog_derivative(s: float, z: float, opts: EvalOptions | None = None) -> float:
    """d/dz Li_s(z) = Li_{s-1}(z) / z for 0 < z < 1.

    Tends to 1 as z -> 0, which is what puts all the distribution densities
    at 1 at the origin.
    """
    z = float(z)
    if not 0.0 < z < 1.0:
        raise DomainError(f"derivative requires 0 < z < 1, got {z!r}")
    return polylog(s - 1.0, z, opts).value / z


def _polylog_many(s: float, z, opts: EvalOptions | None = None) -> np.ndarray:
    """Vectorized kernel used by sampling, curves and PPCC sweeps.

    Follows the same branch rules as ``polylog``; infinity at z = 1 for
    s <= 1.  Raises AccuracyError if any element fails to converge.
    """
    opts = opts or DEFAULT_OPTIONS
    s = float(s)
    z = np.asarray(z, dtype=np.float64)
    if z.ndim == 0:
        return np.asarray(polylog(s, float(z), opts).value)
    if np.isnan(z).any() or (z < 0.0).any() or (z > 1.0).any():
        raise DomainError("z values must lie in [0, 1]")

    out = np.empty_like(z)
    if _is_closed_order(s):
        inner = z < 1.0
        out[inner] = _closed_form_array(int(s), z[inner])
        out[~inner] = math.inf
        return out

    ones = z == 1.0
    out[ones] = zeta(s) if s > 1.0 else math.inf
    near = (~ones) & (z > NEAR_ONE_SWITCH) & _near_one_eligible(s)
    if near.any():
        shift, _ = _near_one_shift(s, opts.rel_tol, opts.max_terms)
        out[near] = math.gamma(1.0 - s) * (-np.log(z[near])) ** (s - 1.0) + shift
    rest = ~(ones | near)
    if rest.any():
        vals, errs, conv = _series_values(s, z[rest], opts)
        if not conv.all():
            bad = np.argmax(~conv)
            raise AccuracyError(
                f"series cap exceeded at s={s}, z={z[rest][bad]}",
                value=float(vals[bad]),
                est_error=float(errs[bad]),
            )
        out[rest] = vals
    return out
