"""Kernel tests: known constants, closed-form agreement, expansion checks."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyquant import (
    AccuracyError,
    DomainError,
    EvalOptions,
    UnsupportedOrderError,
    polylog,
    polylog_closed_form,
    polylog_derivative,
    polylog_near_one,
    polylog_series,
    zeta,
)
from polyquant.polylog import _polylog_many

LN2 = math.log(2.0)


def series_oracle(s, z, terms):
    """Brute-force partial sum of the defining series."""
    return sum(z**k / k**s for k in range(1, terms + 1))


# ---------------------------------------------------------------------------
# known values
# ---------------------------------------------------------------------------

def test_dilog_constants():
    assert polylog(1, 0.5).value == pytest.approx(LN2, abs=1e-12)
    want = math.pi**2 / 12 - LN2**2 / 2
    assert polylog(2, 0.5).value == pytest.approx(want, abs=1e-12)


def test_zero_argument_is_empty_sum():
    for s in (-3.0, -0.5, 0.0, 1.0, 2.5, 10.0):
        assert polylog(s, 0.0).value == 0.0


def test_order_ten_against_series_oracle():
    oracle = series_oracle(10.0, 0.5, 30)
    assert oracle == pytest.approx(0.5002463206, abs=1e-9)  # frozen from the oracle
    assert polylog(10, 0.5).value == pytest.approx(oracle, rel=1e-12)


def test_order_zero_closed_form():
    assert polylog(0, 0.5).value == 1.0


def test_at_one_is_zeta_or_infinite():
    for s in (1.5, 2.0, 4.0):
        assert polylog(s, 1.0).value == pytest.approx(zeta(s), rel=1e-10)
    for s in (1.0, 0.5, 0.0, -2.0):
        assert polylog(s, 1.0).value == math.inf


def test_domain_errors():
    with pytest.raises(DomainError):
        polylog(2, -0.1)
    with pytest.raises(DomainError):
        polylog(2, 1.1)
    with pytest.raises(DomainError):
        polylog(2, math.nan)


def test_series_cap_reports_accuracy_error():
    with pytest.raises(AccuracyError) as exc:
        polylog_series(0.5, 0.999, EvalOptions(max_terms=50))
    assert exc.value.est_error > 0


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def test_closed_form_values():
    assert polylog_closed_form(1, 0.5) == pytest.approx(LN2, rel=1e-15)
    assert polylog_closed_form(-1, 0.5) == pytest.approx(2.0, rel=1e-15)
    # the Li_-3 coefficient set is validated against the brute-force series
    oracle = series_oracle(-3.0, 0.5, 200)
    assert oracle == pytest.approx(26.0, rel=1e-13)
    assert polylog_closed_form(-3, 0.5) == pytest.approx(26.0, rel=1e-15)


def test_closed_form_unsupported_order():
    with pytest.raises(UnsupportedOrderError):
        polylog_closed_form(2, 0.5)
    with pytest.raises(UnsupportedOrderError):
        polylog_closed_form(-4, 0.5)


@pytest.mark.parametrize("n", [1, 0, -1, -2, -3])
def test_series_matches_closed_forms(n):
    for z in np.arange(0.05, 0.951, 0.05):
        closed = polylog_closed_form(n, float(z))
        series = polylog_series(float(n), float(z)).value
        assert abs(series - closed) <= 1e-11 * abs(closed)


# ---------------------------------------------------------------------------
# derivative identity
# ---------------------------------------------------------------------------

def test_derivative_closed_points():
    assert polylog_derivative(1, 0.5) == pytest.approx(2.0, rel=1e-12)
    assert polylog_derivative(0, 0.5) == pytest.approx(4.0, rel=1e-12)
    assert polylog_derivative(3, 1e-9) == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("s", [-2.0, 0.5, 2.0])
@pytest.mark.parametrize("z", [0.1, 0.5, 0.9])
def test_derivative_matches_finite_difference(s, z):
    h = 1e-6 * z
    fd = (polylog(s, z + h).value - polylog(s, z - h).value) / (2 * h)
    assert polylog_derivative(s, z) == pytest.approx(fd, rel=1e-6)


def test_derivative_domain():
    with pytest.raises(DomainError):
        polylog_derivative(2, 0.0)
    with pytest.raises(DomainError):
        polylog_derivative(2, 1.0)


# ---------------------------------------------------------------------------
# near-one expansion
# ---------------------------------------------------------------------------

def test_near_one_leading_order_values():
    got = polylog_near_one(-0.5, math.exp(-0.01))
    want = math.gamma(1.5) * 0.01**-1.5
    assert got == pytest.approx(want, rel=1e-13)
    assert got == pytest.approx(886.2269254, rel=1e-9)
    got = polylog_near_one(0.5, math.exp(-0.0001))
    assert got == pytest.approx(100.0 * math.sqrt(math.pi), rel=1e-12)


def test_near_one_agrees_with_series():
    # within 1% of the straight series at its intended arguments
    for s, z in ((-0.5, math.exp(-0.01)), (0.5, math.exp(-0.0001))):
        lead = polylog_near_one(s, z)
        exact = polylog_series(s, z).value
        assert abs(lead - exact) / abs(exact) < 1e-2


def test_near_one_gamma_pole_rejected():
    with pytest.raises(DomainError):
        polylog_near_one(2, 0.999)
    with pytest.raises(DomainError):
        polylog_near_one(1, 0.999)


def test_near_one_branch_is_continuous_at_switch():
    # the dispatcher shifts the expansion so the branch switch does not jump:
    # just above the switch, the dispatched value still matches the raw
    # series far more tightly than the bare leading order would (~1%)
    for s in (-0.5, 0.3, 0.6):
        z = 1.0 - 0.9999e-4
        dispatched = polylog(s, z).value
        raw = polylog_series(s, z).value
        assert abs(dispatched - raw) <= 1e-7 * abs(raw)
        # and the branch switch preserves monotonicity in z
        assert dispatched >= polylog(s, 1.0 - 1.0001e-4).value * (1 - 1e-12)


def test_near_one_branch_accuracy_for_negative_integer():
    # s = -5 has no gamma pole; the expansion branch must stay accurate
    z = 1.0 - 1e-6
    got = polylog(-5.0, z).value
    closed = z * (1 + 26 * z + 66 * z**2 + 26 * z**3 + z**4) / (1 - z) ** 6
    assert got == pytest.approx(closed, rel=1e-9)


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------

def test_uniform_limit_bound():
    zs = np.linspace(0.0, 1.0, 201)
    gap = max(abs(polylog(10.0, float(z)).value - float(z)) for z in zs)
    assert gap <= zeta(10.0) - 1.0 + 1e-15


@settings(max_examples=40, deadline=None)
@given(
    s=st.floats(min_value=-3.0, max_value=6.0),
    z1=st.floats(min_value=0.0, max_value=0.99),
    z2=st.floats(min_value=0.0, max_value=0.99),
)
def test_monotone_in_z(s, z1, z2):
    lo, hi = sorted((z1, z2))
    v_lo = polylog(s, lo).value
    v_hi = polylog(s, hi).value
    assert v_lo <= v_hi * (1 + 1e-12) + 1e-300


def test_vectorized_matches_scalar():
    zs = np.array([0.0, 0.1, 0.5, 0.9, 0.99, 0.99995, 1.0])
    for s in (-1.5, 0.7, 2.0, 10.0):
        vec = _polylog_many(s, zs)
        for z, v in zip(zs, vec):
            assert v == polylog(s, float(z)).value


def test_est_error_is_honest_for_series():
    # compare the reported bound against a longer evaluation
    r = polylog_series(2.0, 0.5, EvalOptions(rel_tol=1e-9))
    tight = polylog_series(2.0, 0.5, EvalOptions(rel_tol=1e-15))
    assert abs(r.value - tight.value) <= r.est_error


# ---------------------------------------------------------------------------
# zeta
# ---------------------------------------------------------------------------

def test_zeta_classical_and_oracle():
    assert zeta(2.0) == pytest.approx(math.pi**2 / 6, rel=1e-13)
    assert zeta(4.0) == pytest.approx(math.pi**4 / 90, rel=1e-13)
    # Dirichlet series plus tail bound as oracle for zeta(10), 1 ulp slack
    oracle = sum(k**-10.0 for k in range(1, 101))
    assert oracle - 5e-16 <= zeta(10.0) <= oracle + 100.0**-9 / 9 + 5e-16
    assert zeta(10.0) == pytest.approx(1.0009945752, abs=1e-10)


def test_zeta_pole_and_domain():
    with pytest.raises(DomainError):
        zeta(1.0)
    with pytest.raises(DomainError):
        zeta(0.5)
