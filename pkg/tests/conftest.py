"""Shared fixtures: the heavy decompositions are computed once per session."""

from __future__ import annotations

import pytest

from pairtrap2d import kernel_schmidt, nu_of_ln_a, schmidt_decompose

# The scattering length quoted alongside the reference eigenvalue set
# (0.7408, 0.3164 pair, 0.1686, 0.1029) in the source data.  Under the
# quantization condition anchored by the closed-form digamma values this
# label maps to nu = -2.3194, whose spectrum does NOT carry those numbers;
# they are reproduced, to 3e-4 and stably in n_max, at the self-consistent
# point below (nu = -1.84491).  See notes on the label inconsistency.
LN_A_QUOTED = -0.5359
LN_A_CONSISTENT = -0.3894290741

LAW_POINTS = (-1.0, -0.5359, 0.0, 1.0)


@pytest.fixture(scope="session")
def decomp_quoted():
    return schmidt_decompose(nu_of_ln_a(LN_A_QUOTED, 0).nu, 60)


@pytest.fixture(scope="session")
def decomp_consistent():
    return schmidt_decompose(nu_of_ln_a(LN_A_CONSISTENT, 0).nu, 60)


@pytest.fixture(scope="session")
def law_results():
    """Angular-kernel decompositions at the standard comparison points."""
    return {
        ln_a: kernel_schmidt(nu_of_ln_a(ln_a, 0).nu, m_max=40, radial_nodes=320)
        for ln_a in LAW_POINTS
    }


@pytest.fixture(scope="session")
def cart_results():
    """Cartesian decompositions at the same comparison points."""
    return {ln_a: schmidt_decompose(nu_of_ln_a(ln_a, 0).nu, 60) for ln_a in LAW_POINTS}
