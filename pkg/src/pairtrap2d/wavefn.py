"""Relative-motion eigenfunctions and the full two-particle wavefunction.

Conventions (dimensionless throughout): lengths in the oscillator length
a_ho = sqrt(hbar/(m omega)), energies in hbar*omega.  Center-of-mass and
relative coordinates carry the symmetric scaling

    cm  = (r1 + r2)/sqrt(2),      rel = (r1 - r2)/sqrt(2),

so both motions see the same oscillator length.  The interacting s-wave
eigenfunction of the relative motion is

    psi_nu(rho) = Gamma(-nu)/sqrt(pi * S2(nu)) * e^(-rho^2/2) U(-nu, 1, rho^2),

with S2(nu) = sum_{n>=0} (n-nu)^-2 = trigamma(-nu); its expansion over the
non-interacting s-wave orbitals phi_n has coefficients
alpha_n = 1/(sqrt(S2) (n-nu)), which makes the normalization exact and fixes
the overall sign (the overlap with phi_k on branch k is positive).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import (
    EULER_GAMMA,
    digamma,
    gamma_signed,
    kummer_u_log,
    laguerre,
    ln_gamma_signed,
    trigamma,
)


@dataclass(frozen=True)
class AsymptoticCoeffs:
    """Small-separation law U(-nu, 1, rho^2) -> b_nu * ln(rho) + c_nu."""

    b_nu: float
    c_nu: float


@dataclass(frozen=True)
class RadialProfile:
    """Radial probability density of the relative motion.

    density[i] = 2*pi * rho_i * |psi_nu(rho_i)|^2, so that the trapezoid
    integral over a wide enough grid is 1 (the angular 2*pi is folded in).
    """

    rho: np.ndarray
    density: np.ndarray


def _check_nu(nu: float) -> None:
    if nu >= 0.0 and nu == math.floor(nu):
        raise ValueError(f"nu={nu!r} sits on a non-interacting level")


def rel_prefactor(nu: float) -> float:
    """Gamma(-nu)/sqrt(pi * S2(nu)), the normalization of psi_nu."""
    _check_nu(nu)
    return gamma_signed(-nu) / math.sqrt(math.pi * trigamma(-nu))


def psi_rel(nu: float, rho):
    """Normalized relative eigenfunction psi_nu at separation rho > 0.

    2*pi * int |psi|^2 rho d rho = 1.  The value diverges logarithmically
    at rho = 0, which is excluded.  Accepts scalar or array rho.
    """
    ra = np.asarray(rho, dtype=float)
    scalar = np.isscalar(rho) or ra.ndim == 0
    ra = np.atleast_1d(ra)
    if np.any(ra <= 0.0):
        raise ValueError("psi_rel requires rho > 0 (logarithmic point at 0)")
    out = rel_prefactor(nu) * np.exp(-0.5 * ra**2) * kummer_u_log(-nu, ra**2)
    return float(out[0]) if scalar else out


def small_rho_coeffs(nu: float) -> AsymptoticCoeffs:
    """Coefficients of the rho -> 0 form of U(-nu, 1, rho^2).

    b_nu = -2/Gamma(-nu) and
    c_nu = [1 + 2*gamma_E*nu + psi(1-nu)*nu] / Gamma(1-nu).
    Their ratio carries the boundary condition that quantizes the spectrum.
    """
    _check_nu(nu)
    g_m = ln_gamma_signed(-nu)
    b = -2.0 * g_m.sign * math.exp(-g_m.ln_abs)
    g_1m = ln_gamma_signed(1.0 - nu)
    c = (1.0 + 2.0 * EULER_GAMMA * nu + digamma(1.0 - nu) * nu) * g_1m.sign * math.exp(
        -g_1m.ln_abs
    )
    return AsymptoticCoeffs(b_nu=b, c_nu=c)


def radial_density(nu: float, rho_max: float, points: int) -> RadialProfile:
    """Sample 2*pi*rho*|psi_nu(rho)|^2 on a uniform grid.

    The grid starts at rho_max/points (open at 0: the density vanishes there
    but its derivative diverges for any interacting state).
    """
    if rho_max <= 0.0 or points < 2:
        raise ValueError("need rho_max > 0 and points >= 2")
    rho = np.linspace(rho_max / points, rho_max, points)
    psi = psi_rel(nu, rho)
    return RadialProfile(rho=rho, density=2.0 * math.pi * rho * psi**2)


def alpha_coeffs(nu: float, n_max: int):
    """Expansion coefficients of psi_nu over the s-wave orbitals phi_0..phi_n_max.

    alpha_n = 1/(sqrt(S2(nu)) * (n - nu)); sum of all alpha_n^2 is exactly 1.
    """
    _check_nu(nu)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    n = np.arange(n_max + 1, dtype=float)
    return 1.0 / (math.sqrt(trigamma(-nu)) * (n - nu))


def s_wave_orbital(n: int, rho):
    """Non-interacting 2D s-wave orbital phi_n(rho) = e^(-rho^2/2) L_n(rho^2)/sqrt(pi)."""
    ra = np.asarray(rho, dtype=float)
    return np.exp(-0.5 * ra**2) * laguerre(n, ra**2) / math.sqrt(math.pi)


def psi_total(nu: float, x1, y1, x2, y2):
    """Two-particle wavefunction with the center of mass in the trap ground state.

    Psi(r1, r2) = Gamma(-nu)/(pi sqrt(S2)) e^(-(r1^2+r2^2)/2) U(-nu, 1, rho^2),
    where rho^2 = |r1 - r2|^2 / 2.  Symmetric under particle exchange and
    invariant under simultaneous rotations; diverges logarithmically at
    coincidence points, which are rejected.  Broadcasts over array inputs.
    """
    _check_nu(nu)
    x1a, y1a, x2a, y2a = np.broadcast_arrays(
        np.asarray(x1, float), np.asarray(y1, float), np.asarray(x2, float), np.asarray(y2, float)
    )
    scalar = x1a.ndim == 0
    rho2 = 0.5 * ((x1a - x2a) ** 2 + (y1a - y2a) ** 2)
    if np.any(rho2 <= 0.0):
        raise ValueError("psi_total diverges at coincidence points r1 == r2")
    # grouped so particle exchange follows the identical arithmetic path
    s = (x1a**2 + x2a**2) + (y1a**2 + y2a**2)
    pref = gamma_signed(-nu) / (math.pi * math.sqrt(trigamma(-nu)))
    out = pref * np.exp(-0.5 * s) * kummer_u_log(-nu, np.atleast_1d(rho2)).reshape(rho2.shape)
    return float(out) if scalar else out
