"""Root finder, quadrature and gamma tests."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyquant import (
    BracketError,
    ConvergenceError,
    DomainError,
    QuadConfig,
    QuadratureAccuracyError,
    QuadratureDivergenceError,
    QuadratureError,
    RootConfig,
    find_root_monotone,
    gamma_real,
    integrate_unit_interval,
    polylog,
)

LN2 = math.log(2.0)


# ---------------------------------------------------------------------------
# root finding
# ---------------------------------------------------------------------------

def test_linear_root():
    assert find_root_monotone(lambda p: p - 0.3, 0.0, 1.0) == pytest.approx(
        0.3, abs=1e-12
    )


def test_kernel_roots():
    f = lambda p: polylog(1, p).value - LN2
    assert find_root_monotone(f, 0.0, 1 - 2**-52) == pytest.approx(0.5, abs=1e-12)
    g = lambda p: polylog(0, p).value - 1.0
    assert find_root_monotone(g, 0.0, 1 - 2**-52) == pytest.approx(0.5, abs=1e-12)


def test_idempotent_on_own_output():
    f = lambda p: p**3 - 0.2
    tol = 1e-12
    x = find_root_monotone(f, 0.0, 1.0, RootConfig(abs_tol=tol))
    again = find_root_monotone(f, x - tol, x + tol, RootConfig(abs_tol=tol))
    assert abs(again - x) <= tol


def test_bracket_errors():
    with pytest.raises(BracketError):
        find_root_monotone(lambda p: p + 1.0, 0.0, 1.0)
    with pytest.raises(BracketError):
        find_root_monotone(lambda p: p - 0.5, 0.8, 0.2)


def test_max_iter_exhaustion():
    # cubic flatness keeps both secant and bisection from finishing in 3 steps
    with pytest.raises(ConvergenceError):
        find_root_monotone(
            lambda p: (p - 0.33) ** 3, 0.0, 1.0, RootConfig(abs_tol=1e-14, max_iter=3)
        )


def test_infinite_endpoint_values_are_tolerated():
    f = lambda p: math.inf if p > 0.25 else p - 0.25
    assert find_root_monotone(f, 0.0, 1.0) == pytest.approx(0.25, abs=1e-9)


def test_hint_accelerates_but_does_not_change_answer():
    f = lambda p: p**2 - 0.49
    a = find_root_monotone(f, 0.0, 1.0)
    b = find_root_monotone(f, 0.0, 1.0, hint=0.7)
    assert a == pytest.approx(0.7, abs=1e-12)
    assert b == pytest.approx(0.7, abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(root=st.floats(min_value=0.01, max_value=0.99))
def test_recovers_random_roots(root):
    f = lambda p: (p - root) ** 3 + (p - root)
    x = find_root_monotone(f, 0.0, 1.0)
    assert abs(x - root) <= 1e-10


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------

def test_polynomial():
    assert integrate_unit_interval(lambda p: p) == pytest.approx(0.5, rel=1e-9)


def test_exponential_mean_and_second_moment():
    v = integrate_unit_interval(lambda p: polylog(1, p).value)
    assert v == pytest.approx(1.0, rel=1e-9)
    v = integrate_unit_interval(lambda p: polylog(1, p).value ** 2)
    assert v == pytest.approx(2.0, rel=1e-9)


def test_endpoint_singularity_benchmark():
    # worst integrable exponent needed by moments just above the threshold
    v = integrate_unit_interval(lambda p, u: u**-0.5, complement_aware=True)
    assert v == pytest.approx(2.0, rel=1e-9)


def test_linearity():
    base = integrate_unit_interval(lambda p: p * p)
    scaled = integrate_unit_interval(lambda p: 7.0 * p * p)
    assert scaled == pytest.approx(7.0 * base, rel=1e-9)


def test_divergent_integrand_is_flagged():
    with pytest.raises(QuadratureError):
        integrate_unit_interval(lambda p, u: u**-1.2, complement_aware=True)
    with pytest.raises(QuadratureError):
        integrate_unit_interval(lambda p, u: 1.0 / u, complement_aware=True)


def test_non_convergence_reports_estimate():
    try:
        integrate_unit_interval(
            lambda p, u: u**-0.5, QuadConfig(rel_tol=1e-9, max_levels=2),
            complement_aware=True,
        )
    except QuadratureAccuracyError as exc:
        assert exc.estimate == pytest.approx(2.0, rel=1e-2)
    else:  # pragma: no cover
        pytest.fail("expected QuadratureAccuracyError")


def test_nonfinite_sample_is_divergence():
    with pytest.raises(QuadratureDivergenceError):
        integrate_unit_interval(lambda p, u: math.inf, complement_aware=True)


# ---------------------------------------------------------------------------
# gamma
# ---------------------------------------------------------------------------

def test_gamma_values():
    assert gamma_real(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    assert gamma_real(2.0) == 1.0
    assert gamma_real(6.0) == 120.0
    # reflection territory
    assert gamma_real(-0.5) == pytest.approx(-2.0 * math.sqrt(math.pi), rel=1e-13)


def test_gamma_poles():
    for x in (0.0, -1.0, -2.0, -7.0):
        with pytest.raises(DomainError):
            gamma_real(x)


def test_gamma_overflow_is_infinite():
    assert gamma_real(500.0) == math.inf
