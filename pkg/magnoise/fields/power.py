"""Power dissipated in the slab, computed from the Bessel coefficients.

    P = 2 pi sum_m int rho d rho int_slab dz [rho^2 w^2 Re(sigma) |psi_m|^2
            + w Im(mu)/|mu|^2 (rho^4 |psi_m|^2 + rho^2 |d psi_m/dz|^2)]

The z-integrals are done in closed form; the rho-integral runs over
log-spaced panels. Gamma_power = P / (w^2 m.(I + n n).m) is an independent
check on the kernel quadrature.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from pydantic import BaseModel, Field
from scipy import integrate

from ..config import DEFAULT_REL_TOL
from ..core.errors import DomainError, QuadratureError
from ..core.model import Material, SlabSystem, Vector3, skin_depth, unit_vector
from .coefficients import slab_response, source_amplitude

# The integrand carries exp(-2 rho d); beyond rho d = 40 nothing is left
_RHO_D_MAX = 40.0


class DissipatedPower(BaseModel):
    power: float  # W
    gamma_power: float
    omega: float
    dipole: Vector3
    abserr: float = 0.0
    warnings: list[str] = Field(default_factory=list)


def depth_integrals(k: complex, t: float, near: complex, far: complex) -> tuple[float, float]:
    """Closed-form int_0^t |psi|^2 dw and int_0^t |dpsi/dw|^2 dw.

    psi(w) = far exp(-k (t - w)) + near exp(-k w) over the slab depth w.
    """
    kr, ki = k.real, k.imag
    x = 2.0 * kr * t
    decay = t if abs(x) < 1e-14 else -math.expm1(-x) / (2.0 * kr)
    y = 2.0 * ki * t
    if abs(y) < 1e-14:
        phase = complex(t, 0.0)
    else:
        phase = (cmath.exp(1j * y) - 1.0) / (2j * ki)
    cross = far * near.conjugate() * cmath.exp(-k * t) * phase
    diag = (abs(far) ** 2 + abs(near) ** 2) * decay
    value = diag + 2.0 * cross.real
    slope = abs(k) ** 2 * (diag - 2.0 * cross.real)
    return max(value, 0.0), max(slope, 0.0)


def _edges(slab: SlabSystem, lam: float) -> list[float]:
    top = _RHO_D_MAX / slab.d
    marks = {1.0 / slab.d, 1.0 / slab.t, 1.0 / math.sqrt(slab.d * slab.t)}
    if math.isfinite(lam) and lam > 0:
        marks.update({1.0 / lam, lam / (slab.d * slab.t)})
    low = min(marks) * 1e-3
    edges = {0.0, top}
    rho = low
    while rho < top:
        edges.add(rho)
        rho *= 2.0
    edges.update(s * f for s in marks for f in (0.5, 1.0, 2.0) if s * f < top)
    return sorted(edges)


def dissipated_power(
    slab: SlabSystem,
    material: Material,
    omega: float,
    dipole: Vector3 = (0.0, 0.0, 1.0),
    rel_tol: float = DEFAULT_REL_TOL,
) -> DissipatedPower:
    """Time-averaged power absorbed by one slab from an oscillating dipole.

    Args:
        slab: One-slab geometry
        material: Passive slab material
        omega: Angular frequency, rad/s (> 0)
        dipole: Magnetic moment amplitude, A m^2 (nonzero)
        rel_tol: Per-panel quadrature tolerance

    Returns:
        DissipatedPower with the implied Gamma
    """
    if slab.config != "one-slab":
        raise DomainError("dissipated power is computed for the one-slab geometry")
    if not omega > 0:
        raise DomainError("omega must be positive")
    m = np.asarray(dipole, dtype=float)
    n = np.asarray(unit_vector(slab.n_hat), dtype=float)
    norm = float(m @ m + (m @ n) ** 2)
    if norm == 0.0:
        raise DomainError("dipole moment must be nonzero")
    dipole_t = (float(m[0]), float(m[1]), float(m[2]))
    if material.is_lossless:
        return DissipatedPower(power=0.0, gamma_power=0.0, omega=omega, dipole=dipole_t)

    sigma = material.sigma_at(omega)
    mu = material.mu_at(omega)
    ohmic = omega**2 * sigma.real
    magnetic = omega * mu.imag / abs(mu) ** 2
    d, t = slab.d, slab.t
    # |S_m|^2 scales as 1/rho^2 for every order
    modes = sum(abs(source_amplitude(1.0, mo, dipole_t, slab.n_hat)) ** 2 for mo in (-1, 0, 1))

    def integrand(rho: float) -> float:
        if rho == 0.0:
            return 0.0
        resp = slab_response(rho, omega, material, t)
        i_psi, i_dpsi = depth_integrals(resp.k, t, resp.slab_near, resp.slab_far)
        weight = ohmic * rho**2 * i_psi + magnetic * (rho**4 * i_psi + rho**2 * i_dpsi)
        return 2.0 * math.pi * weight * modes * math.exp(-2.0 * rho * d) / rho

    total = 0.0
    abserr = 0.0
    failed = False
    worst = (0.0, 0.0)
    worst_err = -1.0
    edges = _edges(slab, skin_depth(material, omega))
    for lo, hi in zip(edges[:-1], edges[1:], strict=True):
        res = integrate.quad(
            integrand, lo, hi, epsabs=0.0, epsrel=rel_tol, limit=200, full_output=1
        )
        total += float(res[0])
        abserr += float(res[1])
        failed = failed or len(res) > 3
        if res[1] > worst_err:
            worst, worst_err = (lo, hi), float(res[1])
    if failed and abserr > 10.0 * rel_tol * abs(total):
        raise QuadratureError("dissipated power did not converge", worst, abserr)

    power = max(total, 0.0)
    return DissipatedPower(
        power=power,
        gamma_power=power / (omega**2 * norm),
        omega=omega,
        dipole=dipole_t,
        abserr=abserr,
    )
