"""Two contact-interacting bosons in a 2D isotropic harmonic trap.

Energy spectrum, relative-motion wavefunctions, Schmidt decomposition and
von Neumann entanglement entropy, cross-validated by an independent
angular-kernel method, plus the quasi-2D effective-scattering-length map.
All quantities are dimensionless: lengths in the oscillator length a_ho,
energies in hbar*omega.
"""

from .crosscheck import (
    AngularBlock,
    KernelSchmidt,
    angular_block,
    angular_projection,
    basis_overlap,
    kernel_schmidt,
    partial_entropy,
)
from .quasi2d import (
    Quasi2DParams,
    a_eff,
    critical_ln_a_eff,
    ln_a_eff_scaled,
    quasi2d_entropy_curve,
)
from .schmidt import (
    BasisIndex,
    CoefficientMatrix,
    OrbitalField,
    SchmidtSpectrum,
    angular_momentum_sq,
    basis_enumerate,
    coefficient_matrix,
    entropy_of,
    power_law_fit,
    schmidt_decompose,
    schmidt_orbital,
    schmidt_spectrum,
)
from .specfun import (
    EULER_GAMMA,
    LnGammaSigned,
    digamma,
    gamma_half_ratio,
    kummer_u_log,
    laguerre,
    ln_gamma_signed,
    trigamma,
)
from .spectrum import (
    NuSolution,
    binding_energy,
    effective_coupling,
    ln_a_of_nu,
    nu_of_ln_a,
    spectrum_scan,
)
from .wavefn import (
    AsymptoticCoeffs,
    RadialProfile,
    alpha_coeffs,
    psi_rel,
    psi_total,
    radial_density,
    s_wave_orbital,
    small_rho_coeffs,
)

__version__ = "0.1.0"

__all__ = [
    "AngularBlock",
    "AsymptoticCoeffs",
    "BasisIndex",
    "CoefficientMatrix",
    "EULER_GAMMA",
    "KernelSchmidt",
    "LnGammaSigned",
    "NuSolution",
    "OrbitalField",
    "Quasi2DParams",
    "RadialProfile",
    "SchmidtSpectrum",
    "a_eff",
    "alpha_coeffs",
    "angular_block",
    "angular_momentum_sq",
    "angular_projection",
    "basis_enumerate",
    "basis_overlap",
    "binding_energy",
    "coefficient_matrix",
    "critical_ln_a_eff",
    "digamma",
    "effective_coupling",
    "entropy_of",
    "gamma_half_ratio",
    "kernel_schmidt",
    "kummer_u_log",
    "laguerre",
    "ln_a_eff_scaled",
    "ln_a_of_nu",
    "ln_gamma_signed",
    "nu_of_ln_a",
    "partial_entropy",
    "power_law_fit",
    "psi_rel",
    "psi_total",
    "quasi2d_entropy_curve",
    "radial_density",
    "s_wave_orbital",
    "schmidt_decompose",
    "schmidt_orbital",
    "schmidt_spectrum",
    "small_rho_coeffs",
    "spectrum_scan",
    "trigamma",
]
