"""Bessel-mode coefficients of the scalar vorticity around a single slab.

The dipole sits at z = 0, the slab fills d < z < d + t, and z runs along the
slab normal. For each Bessel order m and radial wavenumber rho:

    Region I    psi = S exp(-rho (z - d)) + r exp(-rho (d - z))
    Region II   psi = a exp(-k (d + t - z)) + b exp(-k (z - d))
    Region III  psi = tau exp(-rho (z - d - t))

with S the source amplitude at the near face. Every exponential is referenced
to the face it decays away from, so no term grows like exp(2kt).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel, Field

from ..core.errors import DomainError
from ..core.model import MU0, Material, SlabSystem, Vector3, transverse_basis
from ..kernel.integral import slab_wavenumber

# Boundary conditions must hold to this fraction of the largest amplitude
RESIDUAL_TOL = 1e-10
# |1 - g^2 E^2| below this means the mode is at (or numerically near) a pole
RESONANCE_FLOOR = 1e-30


@dataclass(frozen=True, slots=True)
class SlabResponse:
    """Amplitudes per unit source amplitude S at z = d."""

    k: complex
    reflected: complex
    slab_near: complex  # b, decaying from z = d
    slab_far: complex  # a, decaying from z = d + t
    transmitted: complex
    denominator: complex


def slab_response(rho: float, omega: float, material: Material, t: float) -> SlabResponse:
    """Solve the four boundary conditions for one Bessel mode.

    With q = k/(K rho), g = (q - 1)/(q + 1) and E = exp(-k t):

        r/S   = g (E^2 - 1) / D
        b/S   = 2 / ((q + 1) D)
        a/S   = 2 g E / ((q + 1) D)
        tau/S = 4 q E / ((q + 1)^2 D),     D = 1 - g^2 E^2
    """
    if not rho > 0:
        raise DomainError("radial wavenumber must be positive")
    mu = material.mu_at(omega)
    sigma = material.sigma_at(omega)
    K = mu / MU0
    k = slab_wavenumber(rho, omega, mu, sigma)
    Kr = K * rho
    q = k / Kr
    # q - 1 = (k^2 - K^2 rho^2) / ((k + K rho) K rho), free of cancellation
    q_minus = (1j * omega * mu * sigma + rho * rho * (1.0 - K * K)) / ((k + Kr) * Kr)
    q_plus = q + 1.0
    g = q_minus / q_plus
    E = cmath.exp(-k * t)
    e2_minus = complex(np.expm1(-2.0 * k * t))
    D = 1.0 - g * g * E * E
    return SlabResponse(
        k=k,
        reflected=g * e2_minus / D,
        slab_near=2.0 / (q_plus * D),
        slab_far=2.0 * g * E / (q_plus * D),
        transmitted=4.0 * q * E / (q_plus * q_plus * D),
        denominator=D,
    )


def source_amplitude(rho: float, m: int, dipole: Vector3, n_hat: Vector3) -> complex:
    """Bessel amplitude at z = 0 of the free dipole's vorticity, order m.

    m = 0 carries the normal moment; m = +-1 carry (x -+ i y).m / 2, matching
    the exp(-i m phi) angular transform with J_|m|.
    """
    x, y, n = transverse_basis(n_hat)
    mvec = np.asarray(dipole, dtype=float)
    if m == 0:
        return complex(MU0 * float(n @ mvec) / (4.0 * math.pi * rho))
    if m in (1, -1):
        proj = complex(float(x @ mvec), -m * float(y @ mvec))
        return MU0 * proj / (8.0 * math.pi * rho)
    raise DomainError("a point dipole only excites Bessel orders -1, 0 and 1")


class BesselCoefficients(BaseModel):
    """Mode amplitudes for one (m, rho), referenced to their own faces."""

    m: int
    rho: float
    source: complex
    reflected: complex
    slab_near: complex
    slab_far: complex
    transmitted: complex
    residual: float
    warnings: list[str] = Field(default_factory=list)

    def exponential_form(self, slab: SlabSystem, k: complex) -> dict[str, complex]:
        """Coefficients of exp(rho z), exp(k z), exp(-k z), exp(-rho z).

        Large k t overflows here; the referenced amplitudes never do.
        """
        d, t, rho = slab.d, slab.t, self.rho
        try:
            return {
                "I+": self.reflected * cmath.exp(-rho * d),
                "II+": self.slab_far * cmath.exp(-k * (d + t)),
                "II-": self.slab_near * cmath.exp(k * d),
                "III-": self.transmitted * cmath.exp(rho * (d + t)),
            }
        except OverflowError as e:
            raise DomainError(f"exponential-form coefficients overflow at rho={rho:g}") from e


def boundary_residual(
    rho: float,
    k: complex,
    K: complex,
    t: float,
    S: complex,
    r: complex,
    b: complex,
    a: complex,
    tau: complex,
) -> float:
    """Largest relative mismatch of psi and (d psi/dz)/mu across both faces."""
    E = cmath.exp(-k * t)
    scale = max(abs(S), abs(r), abs(a), abs(b), abs(tau), 1e-300)
    near_value = (S + r) - (a * E + b)
    near_slope = rho * (r - S) - (k / K) * (a * E - b)
    far_value = (a + b * E) - tau
    far_slope = (k / K) * (a - b * E) + rho * tau
    slope_scale = max(rho, abs(k / K)) * scale
    return max(
        abs(near_value) / scale,
        abs(far_value) / scale,
        abs(near_slope) / slope_scale,
        abs(far_slope) / slope_scale,
    )


def solve_coefficients(
    slab: SlabSystem,
    material: Material,
    omega: float,
    rho: float,
    m: int,
    dipole: Vector3,
) -> BesselCoefficients:
    """Bessel coefficients of order m for a dipole at distance d from one slab.

    Args:
        slab: One-slab geometry
        material: Slab material
        omega: Angular frequency, rad/s
        rho: Radial wavenumber, 1/m (> 0)
        m: Bessel order, -1, 0 or 1
        dipole: Magnetic moment, A m^2

    Returns:
        BesselCoefficients with the boundary residual recorded and warnings for
        a residual above 1e-10 or a near-resonant denominator
    """
    if slab.config != "one-slab":
        raise DomainError("Bessel coefficients are solved for the one-slab geometry")
    resp = slab_response(rho, omega, material, slab.t)
    S = source_amplitude(rho, m, dipole, slab.n_hat) * math.exp(-rho * slab.d)
    K = material.mu_at(omega) / MU0
    coeffs = BesselCoefficients(
        m=m,
        rho=rho,
        source=S,
        reflected=S * resp.reflected,
        slab_near=S * resp.slab_near,
        slab_far=S * resp.slab_far,
        transmitted=S * resp.transmitted,
        residual=boundary_residual(
            rho,
            resp.k,
            K,
            slab.t,
            1.0,
            resp.reflected,
            resp.slab_near,
            resp.slab_far,
            resp.transmitted,
        ),
    )
    if coeffs.residual > RESIDUAL_TOL:
        coeffs.warnings.append(f"boundary residual {coeffs.residual:.3g} exceeds {RESIDUAL_TOL:g}")
    if abs(resp.denominator) < RESONANCE_FLOOR:
        coeffs.warnings.append(
            f"near-resonant mode at rho={rho:.6g}: |denominator| = {abs(resp.denominator):.3g}"
        )
    return coeffs
