"""End-to-end check of the Stieltjes route against a sampled oscillator bath."""

from __future__ import annotations

import numpy as np
from pydantic import BaseModel, Field

from ..core.errors import DomainError
from ..core.model import Vector3
from .bath import sample_bath_from_gamma
from .entanglement import angular_factor, spin_entanglement
from .stieltjes import flat_kernel, flat_stieltjes_closed_form


class OracleReport(BaseModel):
    """Flat-Gamma spin entanglement three ways (natural units, hbar = gamma = 1)."""

    bins: int
    omega0: float
    cutoff: float
    gamma_value: float
    closed_form: float
    quadrature: float
    discrete_sum: float
    rel_diff_quadrature: float
    rel_diff_discrete: float
    warnings: list[str] = Field(default_factory=list)


def oracle_chain(
    bins: int = 512,
    omega0: float = 0.01,
    cutoff: float = 1.0,
    gamma_value: float = 1e-3,
    p_hat: Vector3 = (1.0, 0.0, 0.0),
    n_hat: Vector3 = (0.0, 0.0, 1.0),
) -> OracleReport:
    """Compare closed form, quadrature and bath sum for Gamma flat on (0, cutoff).

    The bath carries the full (I + n n) tensor shape, so all three values
    include the same angular factor 3 - (p . n)^2.
    """
    if bins < 1:
        raise DomainError("need at least one bin")
    if not (omega0 > 0 and cutoff > omega0):
        raise DomainError("need 0 < omega0 < cutoff")
    kernel = flat_kernel(gamma_value, cutoff)
    scale = angular_factor(p_hat, n_hat, "slab") / (4.0 * np.pi)
    closed = scale * flat_stieltjes_closed_form(gamma_value, cutoff, omega0)
    quad = spin_entanglement(
        p_hat, omega0, 1.0, kernel, n_hat=n_hat, geometry="slab", hbar=1.0
    )
    bath = sample_bath_from_gamma(
        kernel, np.linspace(0.0, cutoff, bins + 1), 1.0, axes="slab", n_hat=n_hat
    )
    discrete = spin_entanglement(p_hat, omega0, 1.0, bath, hbar=1.0)
    report = OracleReport(
        bins=bins,
        omega0=omega0,
        cutoff=cutoff,
        gamma_value=gamma_value,
        closed_form=closed,
        quadrature=quad.E,
        discrete_sum=discrete.E,
        rel_diff_quadrature=abs(quad.E - closed) / closed,
        rel_diff_discrete=abs(discrete.E - quad.E) / quad.E,
        warnings=quad.warnings + discrete.warnings,
    )
    if report.rel_diff_discrete > 5e-3:
        report.warnings.append(
            f"bath sum differs from quadrature by {report.rel_diff_discrete:.3g}; refine the bins"
        )
    return report
