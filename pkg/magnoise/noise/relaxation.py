"""Spin-1/2 relaxation times T1, T2 and T1rho from magnetic noise."""

from __future__ import annotations

import math

import numpy as np
from pydantic import BaseModel, Field

from ..core.errors import DomainError, MagnoiseError
from ..core.model import CONSTANTS, SpinContext, thermal_occupation_kernel
from ..kernel.integral import DissipationKernel
from .spectra import SpectralDensity, lab_spectral_density, projectors, rotating_frame_density

# Covariant and expanded rate formulas must agree to this relative tolerance
_AGREEMENT_RTOL = 1e-9


def _time(rate: float) -> float:
    return math.inf if rate == 0 else 1.0 / rate


class RelaxationTimes(BaseModel):
    """Relaxation rates (1/s) and times (s); T1rho only with an RF field."""

    rate1: float
    rate2: float
    rate1rho: float | None = None
    warnings: list[str] = Field(default_factory=list)

    @property
    def t1(self) -> float:
        return _time(self.rate1)

    @property
    def t2(self) -> float:
        return _time(self.rate2)

    @property
    def t1rho(self) -> float | None:
        return None if self.rate1rho is None else _time(self.rate1rho)

    def summary(self) -> dict[str, float | None]:
        return {
            "rate1_per_s": self.rate1,
            "rate2_per_s": self.rate2,
            "rate1rho_per_s": self.rate1rho,
            "t1_s": self.t1,
            "t2_s": self.t2,
            "t1rho_s": self.t1rho,
        }


def rates_from_spectra(
    ctx: SpinContext,
    s_zero: SpectralDensity,
    s_omega0: SpectralDensity,
    s_omega1: SpectralDensity | None = None,
) -> RelaxationTimes:
    """Covariant relaxation rates from lab densities at 0, omega0 and omega1.

        1/T1    = 1/2 g^2 tr[(I - bb) S_rot(0)]
        1/T2    = 1/(2 T1) + 1/2 g^2 tr[bb S_rot(0)]
        1/T1rho = 1/2 g^2 tr[(I - b1 b1) S_rot(omega1)]
    """
    g2 = ctx.gamma**2
    bb, perp = projectors(ctx.b_hat)
    rot0 = rotating_frame_density(s_zero, s_omega0, ctx.b_hat).array
    rate1 = 0.5 * g2 * float(np.trace(perp @ rot0))
    rate2 = 0.5 * rate1 + 0.5 * g2 * float(np.trace(bb @ rot0))
    rate1rho = None
    if s_omega1 is not None:
        if ctx.rf is None:
            raise DomainError("T1rho requires an RF field in the spin context")
        _, perp1 = projectors(ctx.rf.b1_hat)
        rot1 = rotating_frame_density(s_omega1, s_omega0, ctx.b_hat).array
        rate1rho = 0.5 * g2 * float(np.trace(perp1 @ rot1))
    return RelaxationTimes(rate1=rate1, rate2=rate2, rate1rho=rate1rho)


def expanded_rates(
    ctx: SpinContext,
    gamma_zero: float,
    gamma_omega0: float,
    gamma_omega1: float | None,
    cos_theta: float,
) -> tuple[float, float, float | None]:
    """Rates written out in Gamma and the angles theta, beta."""
    g2 = ctx.gamma**2
    T = ctx.temperature
    c2 = cos_theta**2
    rate1 = 0.5 * g2 * (3.0 - c2) * gamma_omega0 * thermal_occupation_kernel(ctx.omega0, T)
    rate2 = 0.5 * rate1 + 0.5 * g2 * (1.0 + c2) * gamma_zero * 2.0 * CONSTANTS.k_B * T
    rate1rho = None
    if gamma_omega1 is not None:
        cb2 = ctx.cos_beta() ** 2
        w1 = ctx.omega1
        rate1rho = 0.5 * (1.0 + cb2) * rate1 + 0.5 * g2 * (1.0 - cb2) * (
            1.0 + c2
        ) * gamma_omega1 * thermal_occupation_kernel(w1, T)
    return rate1, rate2, rate1rho


def _agree(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=_AGREEMENT_RTOL, abs_tol=1e-300)


def relaxation_times(
    ctx: SpinContext,
    gamma_zero: DissipationKernel,
    gamma_omega0: DissipationKernel,
    gamma_omega1: DissipationKernel | None = None,
) -> RelaxationTimes:
    """T1, T2 and (with an RF field) T1rho for a spin near a slab.

    Args:
        ctx: Spin context; its temperature sets the thermal factors
        gamma_zero: Gamma at omega = 0 (quasi-static)
        gamma_omega0: Gamma at the precession frequency
        gamma_omega1: Gamma at the spin-lock frequency, required for T1rho

    Returns:
        RelaxationTimes from the covariant formulas, checked against the
        expanded angular forms.
    """
    if ctx.rf is not None and gamma_omega1 is None:
        raise DomainError("spin context has an RF field but Gamma(omega1) was not supplied")
    if gamma_omega1 is not None and ctx.rf is None:
        raise DomainError("T1rho requested without an RF field in the spin context")

    T = ctx.temperature
    s_zero = lab_spectral_density(gamma_zero, omega=0.0, temperature=T)
    s_w0 = lab_spectral_density(gamma_omega0, omega=ctx.omega0, temperature=T)
    s_w1 = None
    if gamma_omega1 is not None:
        s_w1 = lab_spectral_density(gamma_omega1, omega=ctx.omega1, temperature=T)
    result = rates_from_spectra(ctx, s_zero, s_w0, s_w1)

    cos_theta = ctx.cos_theta(gamma_omega0.n_hat)
    r1, r2, r1rho = expanded_rates(
        ctx,
        gamma_zero.gamma_scalar,
        gamma_omega0.gamma_scalar,
        None if gamma_omega1 is None else gamma_omega1.gamma_scalar,
        cos_theta,
    )
    pairs = [(result.rate1, r1), (result.rate2, r2)]
    if r1rho is not None and result.rate1rho is not None:
        pairs.append((result.rate1rho, r1rho))
    for covariant, expanded in pairs:
        if not _agree(covariant, expanded):
            raise MagnoiseError(
                f"covariant rate {covariant!r} disagrees with expanded rate {expanded!r}"
            )

    result.warnings.extend(gamma_zero.warnings + gamma_omega0.warnings)
    if gamma_omega1 is not None:
        result.warnings.extend(gamma_omega1.warnings)
    return result


def equilibrium_polarization(ctx: SpinContext) -> np.ndarray:
    """Thermal-equilibrium spin polarization <s0>, in units of hbar.

    <s0> = (1/2) tanh(hbar gamma B0 / 2 k_B T) b
    """
    if ctx.B0 == 0:
        return np.zeros(3)
    two_kt = 2.0 * CONSTANTS.k_B * ctx.temperature
    if two_kt == 0.0:
        magnitude = 0.5
    else:
        magnitude = 0.5 * math.tanh(CONSTANTS.hbar * ctx.omega0 / two_kt)
    return magnitude * ctx.axis
