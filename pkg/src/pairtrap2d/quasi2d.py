"""Quasi-2D (tight pancake trap) parameters mapped to a 2D scattering length.

A 3D gas squeezed along z with oscillator length a_z = sqrt(hbar/(m omega_z))
scatters at low energy like a 2D system with

    a_eff = 2.092 a_z exp(-sqrt(pi/2) a_z / a_3d),

a_3d being the 3D scattering length (either sign).  In the in-plane trap
units used everywhere else here (lengths in a_perp = sqrt(hbar/(m omega_perp))),

    ln(a_eff / a_perp) = ln(2.092 / sqrt(eta)) - sqrt(pi/2) a_z / a_3d,

with the aspect ratio eta = omega_z / omega_perp, so that a_perp = a_z
sqrt(eta).  (Note the orientation: large eta means tight axial confinement.)
At a_3d -> +/-inf the whole curve pivots around the critical value
ln(2.092/sqrt(eta)), about -0.76 for eta = 20.  The constant 2.092 is used
exactly as conventionally printed, not replaced by a higher-precision value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .schmidt import entropy_of

TIGHT_CONFINEMENT_CONSTANT = 2.092
_SQRT_PI_OVER_2 = math.sqrt(math.pi / 2.0)


@dataclass(frozen=True)
class Quasi2DParams:
    """Aspect ratio eta = omega_z / omega_perp (> 0) and the ratio a_z / a_3d."""

    eta: float
    az_over_a3d: float

    def __post_init__(self) -> None:
        if self.eta <= 0.0:
            raise ValueError("aspect ratio eta must be positive")


def a_eff(a_z: float, a_3d: float) -> float:
    """Effective 2D scattering length of the squeezed 3D gas (same units as a_z)."""
    if a_z <= 0.0:
        raise ValueError("a_z must be positive")
    if a_3d == 0.0:
        raise ValueError("a_3d must be nonzero")
    return TIGHT_CONFINEMENT_CONSTANT * a_z * math.exp(-_SQRT_PI_OVER_2 * a_z / a_3d)


def ln_a_eff_scaled(params: Quasi2DParams) -> float:
    """ln(a_eff / a_perp), the quantity comparable with the true-2D ln a."""
    return math.log(TIGHT_CONFINEMENT_CONSTANT / math.sqrt(params.eta)) - _SQRT_PI_OVER_2 * params.az_over_a3d


def critical_ln_a_eff(eta: float) -> float:
    """ln a_eff at a_3d -> +/-inf, where the quasi-2D mapping pivots."""
    return ln_a_eff_scaled(Quasi2DParams(eta=eta, az_over_a3d=0.0))


def quasi2d_entropy_curve(
    eta: float, ratios, branch: int = 1, n_max: int = 60
) -> list[tuple[float, float, float]]:
    """Entanglement entropy of the true-2D pair at quasi-2D parameter points.

    For each a_z/a_3d ratio, maps to ln a_eff and evaluates the entropy on
    the requested branch; rows are (ratio, ln_a_eff, entropy).
    """
    rows = []
    for r in ratios:
        ln_a = ln_a_eff_scaled(Quasi2DParams(eta=eta, az_over_a3d=float(r)))
        rows.append((float(r), ln_a, entropy_of(ln_a, branch, n_max)))
    return rows
