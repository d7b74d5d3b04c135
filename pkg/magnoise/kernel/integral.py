"""Magnetic dissipation coefficient Gamma(omega) by adaptive quadrature.

The radial wavenumber integral is evaluated in u = rho*d over panels of
doubling width. The slab integrand is written in terms of
exp(-2kt) and a rescaled denominator so that nothing overflows for large rho*t.
"""

from __future__ import annotations

import cmath
import math
import warnings as _warnings
from collections.abc import Callable
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field
from scipy import integrate

from ..config import (
    DEFAULT_ABS_TOL,
    DEFAULT_MAX_SUBDIVISIONS,
    DEFAULT_REL_TOL,
    DEFAULT_TAIL_MULTIPLIER,
    PERMEABILITY_LOSS_WARN,
)
from ..core.errors import DomainError, QuadratureError
from ..core.model import MU0, Material, SlabSystem, Vector3, skin_depth

Method = Literal["quadrature", "two-slab-quadrature", "asymptotic", "interpolated"]


class QuadratureConfig(BaseModel):
    """Tolerances for the radial wavenumber integral."""

    model_config = {"frozen": True}

    rel_tol: float = Field(default=DEFAULT_REL_TOL, gt=0)
    abs_tol: float = Field(default=DEFAULT_ABS_TOL, ge=0)
    max_subdivisions: int = Field(default=DEFAULT_MAX_SUBDIVISIONS, gt=0)
    tail_multiplier: float = Field(default=DEFAULT_TAIL_MULTIPLIER, gt=0)


class DissipationKernel(BaseModel):
    """Gamma(omega) together with how it was obtained.

    The tensor form is (I + n n) Gamma: eigenvalue 2 Gamma along the slab normal
    and Gamma in the plane.
    """

    gamma_scalar: float
    omega: float
    n_hat: Vector3 = (0.0, 0.0, 1.0)
    method: Method
    regime: str | None = None
    abserr: float = 0.0
    warnings: list[str] = Field(default_factory=list)

    def tensor(self) -> np.ndarray:
        n = np.asarray(self.n_hat, dtype=float)
        return (np.eye(3) + np.outer(n, n)) * self.gamma_scalar

    def scaled(self, factor: float) -> DissipationKernel:
        return self.model_copy(update={"gamma_scalar": self.gamma_scalar * factor})


def slab_wavenumber(rho: float, omega: float, mu: complex, sigma: complex) -> complex:
    """k = sqrt(i omega mu sigma + rho^2) on the decaying branch Re(k) >= 0."""
    k = cmath.sqrt(1j * omega * mu * sigma + rho * rho)
    if k.real == 0.0 and k.imag < 0.0:
        k = -k
    return k


def _decay_integral(a: float, t: float) -> float:
    """Integral of exp(-a z) for z in [0, t], a real."""
    x = a * t
    if abs(x) < 1e-12:
        return t
    return -math.expm1(-x) / a


def _phase_integral(ki: float, t: float) -> complex:
    """Integral of exp(2i ki z) for z in [0, t]."""
    x = ki * t
    return t * float(np.sinc(x / math.pi)) * cmath.exp(1j * x)


def slab_profile_integrals(
    rho: float,
    omega: float,
    mu: complex,
    sigma: complex,
    t: float,
    mirror: float = 0.0,
) -> tuple[float, float]:
    """Integrals over the slab depth of |psi|^2 and |d psi/dz|^2 per unit source.

    The slab field is psi = p_u exp(-2kt) exp(k z) + p_v exp(-k z), z measured
    from the near face and normalized to the incident amplitude at that face.
    ``mirror`` is exp(-2 rho d) for the symmetric two-slab geometry, 0 otherwise.

    Returns:
        (I_psi, I_dpsi)
    """
    K = mu / MU0
    Kr = K * rho
    k = slab_wavenumber(rho, omega, mu, sigma)
    assert k.real >= 0.0
    e = cmath.exp(-2.0 * k * t)
    k2_minus = 1j * omega * mu * sigma + rho * rho * (1.0 - K * K)  # k^2 - K^2 rho^2
    k_minus = k2_minus / (k + Kr)  # k - K rho without cancellation
    denom = (k * k + Kr * Kr + mirror * k2_minus) * (1.0 - e) + 2.0 * Kr * k * (1.0 + e)
    if denom == 0:
        return 0.0, 0.0
    p_u = 2.0 * Kr * k_minus / denom
    p_v = 2.0 * Kr * (k + Kr) / denom

    kr, ki = k.real, k.imag
    decay = _decay_integral(2.0 * kr, t)
    grow = math.exp(-2.0 * kr * t) * decay
    cross = p_u * p_v.conjugate() * e * _phase_integral(ki, t)
    uu = abs(p_u) ** 2 * grow
    vv = abs(p_v) ** 2 * decay
    i_psi = uu + vv + 2.0 * cross.real
    i_dpsi = abs(k) ** 2 * (uu + vv - 2.0 * cross.real)
    return max(i_psi, 0.0), max(i_dpsi, 0.0)


def _panel_edges(slab: SlabSystem, lam: float, cfg: QuadratureConfig) -> list[float]:
    """Panel boundaries in u = rho*d, refined below u = 1/2 around geometric scales."""
    scales = [0.5, slab.d / slab.t]
    if math.isfinite(lam):
        scales.append(slab.d / lam)
        scales.append(slab.d * slab.t / lam**2)
    low = min(s for s in scales if s > 0)
    low = max(low / 4.0, 1e-12)
    edges = [0.0]
    u = low
    while u < 0.5:
        edges.append(u)
        u *= 2.0
    edges.append(0.5)
    u = 1.0
    while u <= cfg.tail_multiplier:
        edges.append(u)
        u *= 2.0
    return edges


def integrate_panels(
    integrand: Callable[[float], float],
    edges: list[float],
    cfg: QuadratureConfig,
) -> tuple[float, float]:
    """Sum quad() over consecutive panels until the exponential tail is negligible.

    Returns:
        (value, error estimate including the truncated tail)

    Raises:
        QuadratureError: a panel failed to converge and the total error misses
            the requested tolerance
    """
    total = 0.0
    abserr = 0.0
    worst: tuple[float, float] = (edges[0], edges[1])
    worst_err = -1.0
    failed = False
    last = 0.0
    for lo, hi in zip(edges[:-1], edges[1:], strict=True):
        res = integrate.quad(
            integrand,
            lo,
            hi,
            epsabs=cfg.abs_tol,
            epsrel=cfg.rel_tol,
            limit=cfg.max_subdivisions,
            full_output=1,
        )
        val, err = float(res[0]), float(res[1])
        if len(res) > 3:
            failed = True
        if err > worst_err:
            worst, worst_err = (lo, hi), err
        total += val
        abserr += err
        last = abs(val)
        if hi >= 1.0 and last <= 0.1 * cfg.rel_tol * abs(total):
            break
    abserr += last
    if failed and abserr > max(cfg.abs_tol, 10.0 * cfg.rel_tol * abs(total)):
        raise QuadratureError(
            "Gamma quadrature did not converge", worst_interval=worst, abserr=abserr
        )
    return total, abserr


def _check_omega(omega: float) -> None:
    if not (omega > 0 and math.isfinite(omega)):
        raise DomainError(f"quadrature requires omega > 0, got {omega}")


def _material_warnings(material: Material, omega: float) -> list[str]:
    out: list[str] = []
    K = material.mu_at(omega) / MU0
    if K.real > 0 and K.imag / K.real > PERMEABILITY_LOSS_WARN:
        out.append(
            f"Im(K)/Re(K) = {K.imag / K.real:.3g} > {PERMEABILITY_LOSS_WARN}: magnetic-loss "
            "term is only reliable at leading order"
        )
    return out


def _gamma(
    slab: SlabSystem,
    material: Material,
    omega: float,
    cfg: QuadratureConfig,
    two_slab: bool,
) -> tuple[float, float]:
    sigma = material.sigma_at(omega)
    mu = material.mu_at(omega)
    loss_m = mu.imag / (omega * abs(mu) ** 2)
    d, t = slab.d, slab.t
    lam = skin_depth(material, omega)

    def integrand(u: float) -> float:
        rho = u / d
        if rho == 0.0:
            return 0.0
        mirror = math.exp(-2.0 * u) if two_slab else 0.0
        i_psi, i_dpsi = slab_profile_integrals(rho, omega, mu, sigma, t, mirror=mirror)
        density = rho * sigma.real * i_psi + loss_m * (rho**3 * i_psi + rho * i_dpsi)
        return math.exp(-2.0 * u) * density / d

    value, err = integrate_panels(integrand, _panel_edges(slab, lam, cfg), cfg)
    prefactor = MU0**2 / (16.0 * math.pi)
    factor = 2.0 if two_slab else 1.0
    return factor * prefactor * value, factor * prefactor * err


def gamma_integral(
    slab: SlabSystem,
    material: Material,
    omega: float,
    cfg: QuadratureConfig | None = None,
) -> DissipationKernel:
    """Gamma(omega) for a single slab by adaptive quadrature.

    Args:
        slab: One-slab geometry
        material: Passive slab material
        omega: Angular frequency, rad/s (> 0)
        cfg: Quadrature tolerances

    Returns:
        DissipationKernel tagged "quadrature"
    """
    cfg = cfg or QuadratureConfig()
    _check_omega(omega)
    if slab.config != "one-slab":
        raise DomainError("gamma_integral needs a one-slab geometry; use gamma_two_slab")
    warnings = _material_warnings(material, omega)
    if material.is_lossless:
        return DissipationKernel(
            gamma_scalar=0.0, omega=omega, n_hat=slab.n_hat, method="quadrature"
        )
    value, err = _gamma(slab, material, omega, cfg, two_slab=False)
    return DissipationKernel(
        gamma_scalar=max(value, 0.0),
        omega=omega,
        n_hat=slab.n_hat,
        method="quadrature",
        abserr=err,
        warnings=warnings,
    )


def gamma_two_slab(
    slab: SlabSystem,
    material: Material,
    omega: float,
    cfg: QuadratureConfig | None = None,
) -> DissipationKernel:
    """Gamma'(omega) at the midpoint between two identical slabs (separation 2d)."""
    cfg = cfg or QuadratureConfig()
    _check_omega(omega)
    if slab.config != "two-slab":
        raise DomainError("gamma_two_slab needs a two-slab geometry")
    warnings = _material_warnings(material, omega)
    if material.is_lossless:
        return DissipationKernel(
            gamma_scalar=0.0, omega=omega, n_hat=slab.n_hat, method="two-slab-quadrature"
        )
    value, err = _gamma(slab, material, omega, cfg, two_slab=True)
    return DissipationKernel(
        gamma_scalar=max(value, 0.0),
        omega=omega,
        n_hat=slab.n_hat,
        method="two-slab-quadrature",
        abserr=err,
        warnings=warnings,
    )


def gamma_at(
    slab: SlabSystem,
    material: Material,
    omega: float,
    cfg: QuadratureConfig | None = None,
) -> DissipationKernel:
    """Quadrature Gamma for either geometry; omega = 0 uses the quasi-static limit.

    At omega -> 0 the integrand tends to a finite limit, which is evaluated at a
    frequency far below every geometric crossover.
    """
    if omega == 0.0:
        omega = _quasi_static_omega(slab, material)
    if slab.config == "two-slab":
        return gamma_two_slab(slab, material, omega, cfg)
    return gamma_integral(slab, material, omega, cfg)


def _quasi_static_omega(slab: SlabSystem, material: Material) -> float:
    scale = max(slab.d, slab.t)
    if material.london_depth is not None:
        return 1e-6
    mu_sigma = abs(material.mu_at(1.0) * material.sigma_at(1.0))
    if mu_sigma == 0.0:
        return 1e-6
    # lambda(omega) = (omega mu |sigma|)^-1/2 = 1e4 * max(d, t)
    omega = 1e-8 / (mu_sigma * scale**2)
    if omega <= 0 or not math.isfinite(omega):
        _warnings.warn("could not place a quasi-static reference frequency", stacklevel=2)
        return 1e-6
    return omega
