"""Energy spectrum of the relative motion.

The s-wave levels of two contact-interacting bosons in an isotropic 2D trap
satisfy the quantization condition

    ln a = ln(sqrt 2) - gamma_E - psi(-nu)/2,

with the relative energy E = 2 nu + 1 (units: hbar*omega, lengths in the
oscillator length a_ho).  Because psi is strictly increasing between its
poles, the condition splits into monotone branches: branch 0 runs over
nu < 0 (unbounded below, turning into the bound pair), branch k >= 1 is
confined to nu in (k-1, k).  The scattering length is treated as a free
positive parameter, so any real ln a is accepted on every branch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .specfun import EULER_GAMMA, digamma

_LN_SQRT2 = 0.5 * math.log(2.0)
_POLE_PAD = 1e-9  # keep brackets away from the digamma poles at integers
_MAX_BISECT = 220


@dataclass(frozen=True)
class NuSolution:
    """One solved spectral point: branch, nu, E = 2 nu + 1, and ln a."""

    branch: int
    nu: float
    energy: float
    ln_a: float


def ln_a_of_nu(nu: float) -> float:
    """Closed-form ln(a/a_ho) of a relative level with index nu.

    Poles of psi(-nu) at non-negative integer nu are the non-interacting
    levels; they are rejected.
    """
    if nu >= 0.0 and nu == math.floor(nu):
        raise ValueError(f"nu={nu!r} is a non-interacting level (digamma pole)")
    return _LN_SQRT2 - EULER_GAMMA - 0.5 * digamma(-nu)


def _branch_bracket(ln_a: float, branch: int) -> tuple[float, float]:
    if branch == 0:
        hi = -_POLE_PAD
        lo = -1.0
        while ln_a_of_nu(lo) > ln_a:
            lo *= 2.0
            if lo < -1e18:  # pragma: no cover - ln_a would have to be ~ -40
                raise RuntimeError("bracket failure on the ground branch")
        return lo, hi
    return branch - 1.0 + _POLE_PAD, branch - _POLE_PAD


def nu_of_ln_a(ln_a: float, branch: int = 0) -> NuSolution:
    """Invert the quantization condition on one branch by bisection.

    ln_a_of_nu is strictly increasing inside each branch interval, which the
    initial bracket asserts; a violation would be an internal bug and raises
    RuntimeError.  The root is located to ~1e-13 relative in nu, giving a
    residual in ln a far below 1e-12.
    """
    if branch < 0:
        raise ValueError("branch must be a non-negative integer")
    lo, hi = _branch_bracket(ln_a, branch)
    flo = ln_a_of_nu(lo) - ln_a
    fhi = ln_a_of_nu(hi) - ln_a
    if not (flo <= 0.0 <= fhi):
        raise RuntimeError(
            f"bracket failure at ln_a={ln_a}, branch={branch}: monotonicity violated"
        )
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        if ln_a_of_nu(mid) - ln_a <= 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-13 * max(1.0, abs(lo), abs(hi)):
            break
    nu = 0.5 * (lo + hi)
    return NuSolution(branch=branch, nu=nu, energy=2.0 * nu + 1.0, ln_a=ln_a)


def spectrum_scan(
    ln_a_min: float, ln_a_max: float, steps: int, branches: int
) -> list[NuSolution]:
    """Solve a grid of scattering lengths on the lowest branches.

    Returns the solutions branch-major (branch 0 grid first), each branch
    strictly increasing in nu along the grid.
    """
    if steps < 2 and ln_a_min != ln_a_max:
        raise ValueError("steps must be >= 2 for a non-degenerate scan")
    if ln_a_min > ln_a_max:
        raise ValueError("ln_a_min must not exceed ln_a_max")
    if branches < 1:
        raise ValueError("branches must be positive")
    if steps == 1:
        grid = [ln_a_min]
    else:
        h = (ln_a_max - ln_a_min) / (steps - 1)
        grid = [ln_a_min + i * h for i in range(steps)]
    out: list[NuSolution] = []
    for b in range(branches):
        prev = -math.inf
        for x in grid:
            sol = nu_of_ln_a(x, b)
            if sol.nu <= prev:
                raise RuntimeError(f"non-monotone nu along branch {b} at ln_a={x}")
            prev = sol.nu
            out.append(sol)
    return out


def binding_energy(nu: float) -> float:
    """Binding energy -2 nu of a ground-branch (nu < 0) solution.

    Deep on the bound side this approaches the free-space dimer value; the
    leading asymptotics follow from psi(x) ~ ln x in the quantization
    condition.
    """
    if nu >= 0.0:
        raise ValueError("binding energy is defined for ground-branch nu < 0")
    return -2.0 * nu


def effective_coupling(ln_a: float) -> float:
    """Effective 2D coupling strength g = -2 pi / ln a."""
    if ln_a == 0.0:
        raise ValueError("effective coupling diverges at ln a = 0")
    return -2.0 * math.pi / ln_a
