"""Physical constants, materials, slab geometry and spin context.

Everything is strict SI internally with angular frequencies in rad/s. Complex
conductivity follows sigma = |sigma| exp(-i phi), phi in [0, pi/2]; a passive
permeability has Im(mu) >= 0.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from ..config import COTH_SERIES_CROSSOVER
from .errors import DomainError

Vector3 = tuple[float, float, float]


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA 2018 values used for every computation."""

    hbar: float = 1.054571817e-34  # J s
    k_B: float = 1.380649e-23  # J/K
    mu_0: float = 1.25663706212e-6  # H/m
    e: float = 1.602176634e-19  # C


CONSTANTS = PhysicalConstants()
MU0 = CONSTANTS.mu_0


def unit_vector(v: Vector3 | list[float] | np.ndarray) -> Vector3:
    """Normalize a 3-vector, rejecting zero length."""
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,):
        raise DomainError(f"expected a 3-vector, got shape {arr.shape}")
    norm = float(np.linalg.norm(arr))
    if not math.isfinite(norm) or norm == 0.0:
        raise DomainError("axis vector must be finite and nonzero")
    out = arr / norm
    return (float(out[0]), float(out[1]), float(out[2]))


def transverse_basis(n_hat: Vector3 | np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Right-handed (x, y, n) with x cross y = n; deterministic for a given n."""
    n = np.asarray(unit_vector(n_hat), dtype=float)
    helper = np.array([1.0, 0.0, 0.0]) if abs(n[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    x = np.cross(n, helper)
    x /= np.linalg.norm(x)
    y = np.cross(n, x)
    return x, y, n


class Material(BaseModel):
    """Conducting, possibly permeable, slab material.

    A material is either an ohmic conductor given by |sigma| and phi, an ideal
    superconductor given by its London depth, or a user-supplied dispersion
    (``sigma_fn``/``mu_fn`` closures of angular frequency).
    """

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    sigma_mag: float = 0.0
    phi: float = 0.0
    mu_real: float = MU0
    mu_imag: float = 0.0
    london_depth: float | None = None
    name: str = "custom"
    sigma_fn: Callable[[float], complex] | None = Field(default=None, exclude=True)
    mu_fn: Callable[[float], complex] | None = Field(default=None, exclude=True)

    @model_validator(mode="after")
    def _check_passive(self) -> Material:
        if self.sigma_mag < 0 or not math.isfinite(self.sigma_mag):
            raise DomainError("|sigma| must be finite and >= 0")
        if not 0.0 <= self.phi <= math.pi / 2 + 1e-15:
            raise DomainError(f"conductivity phase phi={self.phi} outside [0, pi/2]; Re(sigma) < 0")
        if self.mu_real <= 0:
            raise DomainError("Re(mu) must be positive")
        if self.mu_imag < 0:
            raise DomainError("Im(mu) must be >= 0 for a passive material")
        if self.london_depth is not None and self.london_depth <= 0:
            raise DomainError("London depth must be positive")
        return self

    @classmethod
    def conductor(
        cls, sigma: float, K: complex = 1.0, phi: float = 0.0, name: str = "conductor"
    ) -> Material:
        """Ohmic conductor with |sigma| (S/m), relative permeability K and phase phi."""
        K = complex(K)
        return cls(
            sigma_mag=float(sigma),
            phi=float(phi),
            mu_real=K.real * MU0,
            mu_imag=K.imag * MU0,
            name=name,
        )

    @classmethod
    def superconductor(cls, london_depth: float, name: str = "superconductor") -> Material:
        """Ideal London superconductor: sigma = -i/(mu0 omega lambda_L^2)."""
        return cls(phi=math.pi / 2, london_depth=float(london_depth), name=name)

    @classmethod
    def two_fluid(
        cls, sigma_normal: float, london_depth: float, name: str = "two-fluid"
    ) -> Material:
        """Superconductor with a normal-electron fraction.

        sigma(omega) = sigma_n - i/(mu0 omega lambda_L^2): the superfluid term dominates at
        low frequency (phase near pi/2) and the phase falls toward 0 as omega grows.
        """
        if sigma_normal < 0 or not london_depth > 0:
            raise DomainError("two-fluid model needs sigma_n >= 0 and a positive London depth")
        inv = 1.0 / (MU0 * london_depth**2)

        def sigma_fn(omega: float) -> complex:
            if omega == 0:
                raise DomainError("two-fluid conductivity is singular at omega = 0")
            return complex(sigma_normal, -inv / abs(omega))

        return cls.from_dispersion(sigma_fn, name=name)

    @classmethod
    def from_dispersion(
        cls,
        sigma_fn: Callable[[float], complex],
        mu_fn: Callable[[float], complex] | None = None,
        name: str = "dispersive",
    ) -> Material:
        """Material whose sigma(omega) and optionally mu(omega) are supplied as closures."""
        return cls(sigma_fn=sigma_fn, mu_fn=mu_fn, name=name)

    @property
    def mu(self) -> complex:
        return complex(self.mu_real, self.mu_imag)

    @property
    def K(self) -> complex:
        return self.mu / MU0

    @property
    def is_lossless(self) -> bool:
        """True when neither Re(sigma) nor Im(mu) can dissipate at any frequency."""
        if self.sigma_fn is not None or self.mu_fn is not None:
            return False
        no_ohmic = self.london_depth is not None or self.sigma_mag == 0.0 or (
            self.phi >= math.pi / 2
        )
        return no_ohmic and self.mu_imag == 0.0

    def sigma_at(self, omega: float) -> complex:
        """Complex conductivity at angular frequency omega."""
        if self.sigma_fn is not None:
            sigma = complex(self.sigma_fn(omega))
            if sigma.real < 0:
                raise DomainError(f"sigma_fn returned Re(sigma) < 0 at omega={omega}")
            return sigma
        if self.london_depth is not None:
            if omega == 0:
                raise DomainError("London conductivity is singular at omega = 0")
            return complex(0.0, -1.0 / (MU0 * abs(omega) * self.london_depth**2))
        if self.phi >= math.pi / 2:
            return complex(0.0, -self.sigma_mag)
        return self.sigma_mag * complex(math.cos(self.phi), -math.sin(self.phi))

    def mu_at(self, omega: float) -> complex:
        if self.mu_fn is not None:
            mu = complex(self.mu_fn(omega))
            if mu.imag < 0:
                raise DomainError(f"mu_fn returned Im(mu) < 0 at omega={omega}")
            return mu
        return self.mu

    def phi_at(self, omega: float) -> float:
        """Conductivity phase, recovered as -arg(sigma)."""
        if self.sigma_fn is None:
            return self.phi
        return float(-np.angle(self.sigma_at(omega)))


class SlabSystem(BaseModel):
    """Slab geometry: source-to-surface distance d, thickness t and unit normal.

    In the two-slab configuration the field point sits midway between two
    identical slabs, each a distance d away (separation 2d).
    """

    model_config = {"frozen": True}

    d: float
    t: float
    n_hat: Vector3 = (0.0, 0.0, 1.0)
    config: Literal["one-slab", "two-slab"] = "one-slab"

    @field_validator("d", "t")
    @classmethod
    def _positive(cls, v: float) -> float:
        if not (v > 0 and math.isfinite(v)):
            raise DomainError("slab distance and thickness must be finite and > 0")
        return v

    @field_validator("n_hat", mode="before")
    @classmethod
    def _normalize(cls, v: Vector3) -> Vector3:
        return unit_vector(v)

    @property
    def normal(self) -> np.ndarray:
        return np.asarray(self.n_hat, dtype=float)


class RFField(BaseModel):
    """Spin-locking RF field of amplitude B1 along b1_hat (rotating frame)."""

    model_config = {"frozen": True}

    B1: float
    b1_hat: Vector3

    @field_validator("b1_hat", mode="before")
    @classmethod
    def _normalize(cls, v: Vector3) -> Vector3:
        return unit_vector(v)


class SpinContext(BaseModel):
    """A spin-1/2 with gyromagnetic ratio gamma (rad/(s T)) in field B0 along b_hat."""

    model_config = {"frozen": True}

    gamma: float
    B0: float
    b_hat: Vector3 = (0.0, 0.0, 1.0)
    temperature: float = 0.0
    rf: RFField | None = None

    @field_validator("gamma")
    @classmethod
    def _gamma_positive(cls, v: float) -> float:
        if v <= 0:
            raise DomainError("gyromagnetic ratio must be positive")
        return v

    @field_validator("B0", "temperature")
    @classmethod
    def _non_negative(cls, v: float) -> float:
        if v < 0:
            raise DomainError("B0 and temperature must be >= 0")
        return v

    @field_validator("b_hat", mode="before")
    @classmethod
    def _normalize(cls, v: Vector3) -> Vector3:
        return unit_vector(v)

    @property
    def omega0(self) -> float:
        return self.gamma * self.B0

    @property
    def omega1(self) -> float:
        if self.rf is None:
            raise DomainError("spin context has no RF field")
        return self.gamma * self.rf.B1

    @property
    def axis(self) -> np.ndarray:
        return np.asarray(self.b_hat, dtype=float)

    def cos_theta(self, n_hat: Vector3 | np.ndarray) -> float:
        """Cosine of the angle between the polarizing axis and a slab normal."""
        return float(np.clip(np.dot(self.axis, np.asarray(n_hat, dtype=float)), -1.0, 1.0))

    def cos_beta(self) -> float:
        """Cosine of the angle between b_hat and the RF axis."""
        if self.rf is None:
            raise DomainError("spin context has no RF field")
        return float(np.clip(np.dot(self.axis, np.asarray(self.rf.b1_hat)), -1.0, 1.0))


def skin_depth(material: Material, omega: float) -> float:
    """Skin depth lambda = |omega mu sigma|^(-1/2).

    Args:
        material: Slab material
        omega: Angular frequency, rad/s

    Returns:
        Skin depth in metres; ``math.inf`` at omega = 0 (quasi-static sentinel)
        or for a non-conducting, non-superconducting material.
    """
    if material.london_depth is not None:
        return material.london_depth
    if omega == 0:
        return math.inf
    product = abs(omega * material.mu_at(omega) * material.sigma_at(omega))
    if product == 0:
        return math.inf
    return float(product**-0.5)


def coth_kernel(x: np.ndarray | float) -> np.ndarray:
    """x coth(x), even in x, with a series branch near 0."""
    x = np.abs(np.asarray(x, dtype=float))
    out = np.empty_like(x)
    small = x < COTH_SERIES_CROSSOVER
    out[small] = 1.0 + x[small] ** 2 / 3.0
    big = ~small
    out[big] = x[big] / np.tanh(x[big])
    return out


def thermal_occupation_kernel(
    omega: float, temperature: float, constants: PhysicalConstants = CONSTANTS
) -> float:
    """hbar omega coth(hbar omega / 2 k_B T), the fluctuation-dissipation energy factor.

    Returns hbar|omega| at T = 0 and 2 k_B T at omega = 0.
    """
    if temperature < 0:
        raise DomainError("temperature must be >= 0")
    hw = constants.hbar * abs(omega)
    if temperature == 0:
        return hw
    two_kt = 2.0 * constants.k_B * temperature
    # coth(x) is 1 to double precision past x = 40; 2 k_B T may also underflow to 0
    if two_kt == 0.0 or hw > 40.0 * two_kt:
        return hw
    x = hw / two_kt
    return float(two_kt * coth_kernel(x)[()])
