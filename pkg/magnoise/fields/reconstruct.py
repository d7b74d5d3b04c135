"""Nonsingular E and B fields on the source side of a single slab.

    B = curl A + grad(d psi_I / dz)
    E = -i w A - i w grad(psi_I) x n + grad(phi_2)

A is the free dipole's vector potential, psi_I the reflected vorticity
(Hankel-inverted from the Bessel coefficients) and phi_2 the image potential
of the surface charge. With E = -i w curl(psi n), Faraday's law fixes
B = curl curl(psi n), which in the charge-free source region is grad(d psi/dz).
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from functools import lru_cache

import numpy as np
from pydantic import BaseModel, Field

from ..core.errors import DomainError
from ..core.model import MU0, Material, SlabSystem, Vector3, skin_depth, unit_vector
from .coefficients import slab_response
from .hankel import hankel_integral

ComplexVector = tuple[complex, complex, complex]


def _cvec(v: np.ndarray) -> ComplexVector:
    return (complex(v[0]), complex(v[1]), complex(v[2]))


class FieldSample(BaseModel):
    """Fields at one point in the source region (T and V/m, complex amplitudes)."""

    position: Vector3
    B: ComplexVector
    E: ComplexVector
    B_reflected: ComplexVector
    warnings: list[str] = Field(default_factory=list)

    @property
    def B_array(self) -> np.ndarray:
        return np.asarray(self.B, dtype=complex)

    @property
    def E_array(self) -> np.ndarray:
        return np.asarray(self.E, dtype=complex)


def dipole_field(dipole: np.ndarray, x: np.ndarray) -> np.ndarray:
    """mu0 / (4 pi |x|^3) (3 x x - I) . m"""
    dist = float(np.linalg.norm(x))
    xh = x / dist
    return MU0 / (4.0 * math.pi * dist**3) * (3.0 * xh * float(xh @ dipole) - dipole)


def dipole_vector_potential(dipole: np.ndarray, x: np.ndarray) -> np.ndarray:
    dist = float(np.linalg.norm(x))
    return MU0 / (4.0 * math.pi) * np.cross(dipole, x) / dist**3


def image_potential_gradient(
    dipole: np.ndarray, n: np.ndarray, d: float, omega: float, x: np.ndarray
) -> np.ndarray:
    """grad phi_2 at x, with phi_2(x) = -phi_1(2 d n - x)."""
    y = 2.0 * d * n - x
    c = np.cross(n, dipole)
    ry = float(np.linalg.norm(y))
    yn = float(y @ n)
    g = ry * ry + ry * yn
    grad_g = 2.0 * y + (yn / ry) * y + ry * n
    grad_f = c / g - float(y @ c) * grad_g / (g * g)
    return 1j * omega * MU0 / (4.0 * math.pi) * grad_f


def _gradient(
    normal_moment: float,
    transverse_moment: np.ndarray,
    n: np.ndarray,
    rhat: np.ndarray,
    d0: complex,
    d1: complex,
    a1_over_r: complex,
) -> np.ndarray:
    """Gradient of Mn F0(r, z) + (m_perp . r) F1(r, z) from its Hankel pieces."""
    mr = float(transverse_moment @ rhat)
    along = normal_moment * d0 + mr * d1
    across = (-normal_moment * d1 + mr * d0) * rhat + a1_over_r * (
        transverse_moment - 2.0 * mr * rhat
    )
    return along * n + across


def reconstruct_fields(
    slab: SlabSystem,
    material: Material,
    omega: float,
    dipole: Vector3,
    positions: Sequence[Vector3],
    rel_tol: float = 1e-11,
) -> list[FieldSample]:
    """Fields of an oscillating dipole at the origin, slab at distance d along n.

    Args:
        slab: One-slab geometry
        material: Slab material
        omega: Angular frequency, rad/s (> 0)
        dipole: Magnetic moment amplitude, A m^2
        positions: Points with (x . n) < d, excluding the origin
        rel_tol: Hankel quadrature tolerance

    Returns:
        One FieldSample per position, in input order
    """
    if slab.config != "one-slab":
        raise DomainError("field reconstruction is available for the one-slab geometry only")
    if not omega > 0:
        raise DomainError("omega must be positive")
    m = np.asarray(dipole, dtype=float)
    n = np.asarray(unit_vector(slab.n_hat), dtype=float)
    d, t = slab.d, slab.t
    mn = float(m @ n)
    m_perp = m - mn * n
    lam = skin_depth(material, omega)
    # only a conducting slab carries the surface charge behind phi_2
    charged = material.sigma_at(omega) != 0
    scales = [1.0 / d, 1.0 / t] + ([1.0 / lam] if math.isfinite(lam) and lam > 0 else [])

    @lru_cache(maxsize=None)
    def reflection(rho: float) -> complex:
        return slab_response(rho, omega, material, t).reflected

    prefactor = MU0 / (4.0 * math.pi)
    out: list[FieldSample] = []
    for pos in positions:
        x = np.asarray(pos, dtype=float)
        z = float(x @ n)
        if z >= d:
            raise DomainError(f"position {tuple(pos)} is not on the source side of the slab")
        if float(np.linalg.norm(x)) == 0.0:
            raise DomainError("fields are singular at the dipole location")
        r_vec = x - z * n
        r = float(np.linalg.norm(r_vec))
        rhat = r_vec / r if r > 0 else np.zeros(3)
        h = 2.0 * d - z
        warnings: list[str] = []

        def hankel(order: int, power: int) -> complex:
            def f(rho: float) -> complex:
                return rho**power * reflection(rho) * math.exp(-rho * h)

            res = hankel_integral(f, order, r, decay_length=h, scales=scales, rel_tol=rel_tol)
            if not res.converged:
                warnings.append(
                    f"Hankel integral J{order} rho^{power} not converged at r={r:.6g} "
                    f"(abserr {res.abserr:.3g})"
                )
            return res.value

        f01, f02 = hankel(0, 1), hankel(0, 2)
        f11, f12 = hankel(1, 1), hankel(1, 2)
        if r > 0:
            f10_over_r = hankel(1, 0) / r
            f11_over_r = f11 / r
        else:
            # J1(rho r)/r -> rho/2
            f10_over_r = 0.5 * f01
            f11_over_r = 0.5 * f02

        grad_psi = prefactor * _gradient(mn, m_perp, n, rhat, f01, f11, f10_over_r)
        grad_dz_psi = prefactor * _gradient(mn, m_perp, n, rhat, f02, f12, f11_over_r)

        b_reflected = grad_dz_psi
        b_total = dipole_field(m, x) + b_reflected
        e_total = -1j * omega * dipole_vector_potential(m, x) - 1j * omega * np.cross(grad_psi, n)
        if charged:
            e_total = e_total + image_potential_gradient(m, n, d, omega, x)
        out.append(
            FieldSample(
                position=(float(x[0]), float(x[1]), float(x[2])),
                B=_cvec(b_total),
                E=_cvec(e_total),
                B_reflected=_cvec(b_reflected),
                warnings=warnings,
            )
        )
    return out
