"""Tight-pancake mapping to the effective 2D scattering length."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pairtrap2d import (
    Quasi2DParams,
    a_eff,
    critical_ln_a_eff,
    ln_a_eff_scaled,
    quasi2d_entropy_curve,
)


def test_a_eff_vanishing_ratio():
    assert abs(a_eff(0.7, 1e12) - 2.092 * 0.7) < 1e-9


def test_a_eff_unit_point():
    want = 2.092 * math.exp(-math.sqrt(math.pi / 2.0))
    assert abs(a_eff(1.0, 1.0) - want) < 1e-12
    assert abs(want - 0.5973) < 1e-4


def test_a_eff_validation():
    with pytest.raises(ValueError):
        a_eff(-1.0, 1.0)
    with pytest.raises(ValueError):
        a_eff(1.0, 0.0)


def test_critical_value_at_eta_twenty():
    assert abs(critical_ln_a_eff(20.0) - (-0.7597)) < 1e-3
    assert abs(critical_ln_a_eff(20.0) - (-0.76)) < 5e-3


def test_scaled_at_unit_aspect():
    assert abs(ln_a_eff_scaled(Quasi2DParams(1.0, 0.0)) - math.log(2.092)) < 1e-12


def test_scaled_monotone_decreasing_in_ratio():
    vals = [ln_a_eff_scaled(Quasi2DParams(20.0, r)) for r in (-1.0, 0.0, 1.0, 2.0)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


@settings(max_examples=100, deadline=None)
@given(st.floats(0.05, 200.0), st.floats(0.01, 5.0), st.floats(0.1, 10.0))
def test_definitions_consistent(eta, a_z, abs_a3d):
    # ln(a_eff / a_perp) with a_perp = a_z sqrt(eta) must equal the scaled form
    for a_3d in (abs_a3d, -abs_a3d):
        direct = math.log(a_eff(a_z, a_3d) / (a_z * math.sqrt(eta)))
        scaled = ln_a_eff_scaled(Quasi2DParams(eta, a_z / a_3d))
        assert abs(direct - scaled) < 1e-12


def test_ratios_symmetric_about_critical_value():
    c = critical_ln_a_eff(20.0)
    hi = ln_a_eff_scaled(Quasi2DParams(20.0, -0.4))
    lo = ln_a_eff_scaled(Quasi2DParams(20.0, 0.4))
    assert abs((hi - c) + (lo - c)) < 1e-12


def test_eta_validation():
    with pytest.raises(ValueError):
        Quasi2DParams(-3.0, 0.0)


def test_entropy_curve_composition():
    rows = quasi2d_entropy_curve(20.0, [-0.3, 0.0, 0.3], branch=1, n_max=40)
    assert len(rows) == 3
    ratios, ln_as, entropies = zip(*rows)
    assert ratios == (-0.3, 0.0, 0.3)
    assert abs(ln_as[1] - critical_ln_a_eff(20.0)) < 1e-12
    # branch-1 entropy increases with ln a_eff, and ln a_eff decreases with ratio
    assert all(a > b for a, b in zip(ln_as, ln_as[1:]))
    assert all(a > b for a, b in zip(entropies, entropies[1:]))
