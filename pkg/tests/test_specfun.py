"""Special-function accuracy against closed forms and independent oracles."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from pairtrap2d import specfun as sf

G = sf.EULER_GAMMA
LN2 = math.log(2.0)


def not_near_integer(x: float, pad: float = 1e-3) -> bool:
    return abs(x - round(x)) > pad


# ---------------------------------------------------------------- ln gamma


def test_ln_gamma_at_one():
    g = sf.ln_gamma_signed(1.0)
    assert g.ln_abs == 0.0
    assert g.sign == 1


def test_ln_gamma_half_and_negative_half():
    g = sf.ln_gamma_signed(0.5)
    assert abs(g.ln_abs - 0.5 * math.log(math.pi)) < 1e-13
    assert g.sign == 1
    # reflection: Gamma(-1/2) = -2 sqrt(pi)
    g = sf.ln_gamma_signed(-0.5)
    assert abs(g.ln_abs - math.log(2.0 * math.sqrt(math.pi))) < 1e-13
    assert g.sign == -1


def test_ln_gamma_sign_alternates():
    assert [sf.ln_gamma_signed(x).sign for x in (-0.5, -1.5, -2.5, -3.5)] == [-1, 1, -1, 1]


def test_ln_gamma_pole_rejected():
    for x in (0.0, -1.0, -7.0):
        with pytest.raises(ValueError):
            sf.ln_gamma_signed(x)


@settings(max_examples=200, deadline=None)
@given(st.floats(-20.0, 20.0))
def test_ln_gamma_reflection(x):
    assume(not_near_integer(x))
    lhs = sf.ln_gamma_signed(x).ln_abs + sf.ln_gamma_signed(1.0 - x).ln_abs
    rhs = math.log(math.pi / abs(math.sin(math.pi * x)))
    assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(rhs))


# ----------------------------------------------------------------- digamma


def test_digamma_closed_forms():
    assert abs(sf.digamma(1.0) + G) < 1e-12
    assert abs(sf.digamma(0.5) - (-G - 2.0 * LN2)) < 1e-12
    # recurrence psi(1/2) = psi(-1/2) - 2
    assert abs(sf.digamma(-0.5) - (2.0 - G - 2.0 * LN2)) < 1e-12


def test_digamma_pole_rejected():
    for x in (0.0, -3.0):
        with pytest.raises(ValueError):
            sf.digamma(x)


@settings(max_examples=300, deadline=None)
@given(st.floats(-50.0, 50.0))
def test_digamma_recurrence(x):
    assume(not_near_integer(x) and not_near_integer(x + 1.0))
    assert abs(sf.digamma(x + 1.0) - sf.digamma(x) - 1.0 / x) < 1e-10


@settings(max_examples=200, deadline=None)
@given(st.floats(0.01, 80.0))
def test_digamma_duplication(x):
    lhs = sf.digamma(x) + sf.digamma(x + 0.5) + 2.0 * LN2
    assert abs(lhs - 2.0 * sf.digamma(2.0 * x)) < 1e-10


# -------------------------------------------- trigamma / the spectral sum


def test_trigamma_closed_forms():
    assert abs(sf.trigamma(1.0) - math.pi**2 / 6.0) < 1e-12
    assert abs(sf.trigamma(0.5) - math.pi**2 / 2.0) < 1e-12
    # shift across the pole: psi'(-1/2) = 4 + psi'(1/2)
    assert abs(sf.trigamma(-0.5) - (4.0 + math.pi**2 / 2.0)) < 1e-12


def test_trigamma_brute_series():
    # sum_{n>=0} (n + x)^-2 by 10^6 explicit terms plus an integral-bracketed tail
    x = -0.5  # the spectral sum at nu = +1/2
    n = np.arange(1_000_000, dtype=float)
    partial = float(np.sum(1.0 / (n + x) ** 2))
    lo, hi = partial + 1.0 / (1_000_000 + x), partial + 1.0 / (999_999 + x)
    assert lo - 1e-10 <= sf.trigamma(x) <= hi + 1e-10


@settings(max_examples=100, deadline=None)
@given(st.floats(-30.0, 30.0))
def test_trigamma_partial_sum_bracket(x):
    assume(not_near_integer(x, 1e-2))
    n = np.arange(10_000, dtype=float) + x
    partial = float(np.sum(1.0 / n**2))
    lo = partial + 1.0 / (10_000 + x)
    hi = partial + 1.0 / (9_999 + x)
    assert lo - 1e-10 <= sf.trigamma(x) <= hi + 1e-10


def test_trigamma_positive_everywhere():
    for x in (-9.7, -4.3, -0.1, 0.3, 2.0, 47.0):
        assert sf.trigamma(x) > 0.0


def test_trigamma_pole_rejected():
    with pytest.raises(ValueError):
        sf.trigamma(-2.0)


# ---------------------------------------------------------------- laguerre


def test_laguerre_low_orders():
    assert sf.laguerre(0, 5.7) == 1.0
    assert abs(sf.laguerre(1, 2.0) - (-1.0)) < 1e-15


def test_laguerre_order_five_exact_coefficients():
    # L_5 from the monomial form sum_k C(5,k) (-x)^k / k!
    x = Fraction(13, 10)
    exact = sum(
        Fraction(math.comb(5, k)) * (-x) ** k / Fraction(math.factorial(k)) for k in range(6)
    )
    assert abs(sf.laguerre(5, 1.3) - float(exact)) < 1e-14


def test_laguerre_array_and_validation():
    out = sf.laguerre(3, np.array([0.0, 1.0, 2.0]))
    assert out.shape == (3,)
    assert abs(out[0] - 1.0) < 1e-15
    with pytest.raises(ValueError):
        sf.laguerre(-1, 1.0)


# ------------------------------------------------------------- kummer U


def u_integral_oracle(a: float, x: float) -> float:
    """U(a,1,x) from its Laplace integral, adaptive quadrature, a > 0.

    The t^(a-1) endpoint singularity is flattened with t = u^(1/a).
    """
    head, _ = quad(
        lambda u: math.exp(-x * u ** (1.0 / a)) * (1.0 + u ** (1.0 / a)) ** (-a) / a,
        0.0,
        1.0,
        epsabs=1e-14,
        epsrel=1e-13,
        limit=200,
    )
    tail, _ = quad(
        lambda t: math.exp(-x * t) * t ** (a - 1.0) * (1.0 + t) ** (-a),
        1.0,
        np.inf,
        epsabs=1e-14,
        epsrel=1e-13,
        limit=200,
    )
    return (head + tail) / math.gamma(a)


def test_u_trivial_and_polynomial_cases():
    assert sf.kummer_u_log(0.0, 3.3) == 1.0
    assert abs(sf.kummer_u_log(-1.0, 3.0) - 2.0) < 1e-12  # x - 1 at x = 3


def test_u_matches_laguerre_at_negative_integers():
    for n in range(7):
        for x in (0.1, 1.0, 5.0):
            want = (-1.0) ** n * math.factorial(n) * sf.laguerre(n, x)
            got = sf.kummer_u_log(float(-n), x)
            assert abs(got - want) <= 1e-9 * max(1.0, abs(want))


@pytest.mark.parametrize(
    "a,x",
    [(0.3, 1.7), (0.3, 0.05), (0.5, 1.0), (2.38, 5.0), (5.147, 0.9), (1.07, 30.0), (0.9, 64.0)],
)
def test_u_against_integral_oracle(a, x):
    ref = u_integral_oracle(a, x)
    assert abs(sf.kummer_u_log(a, x) - ref) < 1e-9 * max(abs(ref), 1e-6)


def test_u_negative_a_against_mpmath():
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 30
    for a in (-0.452, -0.959, -1.45, -2.45, -3.8):
        for x in (0.2, 3.0, 15.9, 16.1, 40.0, 100.0):
            ref = float(mp.hyperu(a, 1, x))
            assert abs(sf.kummer_u_log(a, x) - ref) < 1e-9 * max(abs(ref), 1e-12)


def test_u_domain_error():
    with pytest.raises(ValueError):
        sf.kummer_u_log(0.3, 0.0)
    with pytest.raises(ValueError):
        sf.kummer_u_log(0.3, np.array([1.0, -2.0]))


def test_u_vectorized_matches_scalar():
    xs = np.array([0.02, 0.8, 4.0, 17.0, 90.0])
    vec = sf.kummer_u_log(0.77, xs)
    for x, v in zip(xs, vec):
        assert abs(sf.kummer_u_log(0.77, float(x)) - v) < 1e-13 * max(1.0, abs(v))


# ----------------------------------------------------- gamma half ratios


def test_gamma_half_ratio_anchors():
    assert abs(sf.gamma_half_ratio(0, 0) - math.sqrt(math.pi)) < 1e-13
    assert abs(sf.gamma_half_ratio(1, 1) - math.sqrt(math.pi) / 2.0) < 1e-13


def test_gamma_half_ratio_exact_rational():
    # Gamma(10.5)/10! = C(20,10) sqrt(pi)/4^10
    want = math.comb(20, 10) * math.sqrt(math.pi) / 4**10
    assert abs(sf.gamma_half_ratio(10, 10) - want) < 1e-12 * want


def test_gamma_half_ratio_large_indices_log_space():
    val = sf.gamma_half_ratio(200, 198)
    assert 0.0 < val < 1.0  # would overflow if factorials were formed directly


def test_gamma_half_ratio_parity_rejected():
    with pytest.raises(ValueError):
        sf.gamma_half_ratio(2, 1)


def test_gamma_half_ratio_table_matches_scalar():
    tab = sf.gamma_half_ratio_table(6)
    for m in range(7):
        for n in range(7):
            if (m + n) % 2 == 0:
                assert abs(tab[m, n] - sf.gamma_half_ratio(m, n)) < 1e-13
            else:
                assert tab[m, n] == 0.0


# -------------------------------------------------- oscillator functions


def test_hermite_functions_orthonormal():
    x = np.linspace(-12.0, 12.0, 6001)
    h = sf.hermite_functions(8, x)
    overlaps = h @ h.T * (x[1] - x[0])
    assert np.max(np.abs(overlaps - np.eye(9))) < 1e-7


def test_hermite_polynomials_consistent_with_functions():
    x = np.linspace(-3.0, 3.0, 11)
    h = sf.hermite_functions(5, x)
    p = sf.hermite_polynomials_normalized(5, x)
    assert np.max(np.abs(h - p * np.exp(-0.5 * x**2))) < 1e-12
