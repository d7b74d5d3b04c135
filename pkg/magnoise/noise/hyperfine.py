"""Hyperfine-enhanced noise coupling for donor nuclear spins."""

from __future__ import annotations

import numpy as np
from pydantic import BaseModel, field_validator

from ..core.errors import DomainError
from ..core.model import Vector3, unit_vector
from .spectra import SpectralDensity, projectors


class HyperfineSystem(BaseModel):
    """Electron and nuclear spins coupled by a contact hyperfine term.

    Both gyromagnetic ratios are positive (rad/(s T)); A is in rad/s, so
    hbar A / 2 pi = 29 MHz corresponds to A = 2 pi x 29e6.
    """

    model_config = {"frozen": True}

    gamma_e: float
    gamma_n: float
    A: float
    B0: float
    b_hat: Vector3 = (0.0, 0.0, 1.0)

    @field_validator("gamma_e", "gamma_n")
    @classmethod
    def _positive(cls, v: float) -> float:
        if v <= 0:
            raise DomainError("gyromagnetic ratios must be positive")
        return v

    @field_validator("b_hat", mode="before")
    @classmethod
    def _normalize(cls, v: Vector3) -> Vector3:
        return unit_vector(v)

    @property
    def transverse_gain(self) -> float:
        """1 + 2A / (gamma_n B0)."""
        nuclear = self.gamma_n * self.B0
        if nuclear <= 0:
            raise DomainError("gamma_n B0 must be positive")
        return 1.0 + 2.0 * self.A / nuclear

    @property
    def omega0(self) -> float:
        """Splitting of the two lowest levels, gamma_n B0 + 2A (to first order in A)."""
        return self.gamma_n * self.B0 + 2.0 * self.A

    def coupling_matrix(self) -> np.ndarray:
        bb, perp = projectors(self.b_hat)
        return bb + self.transverse_gain * perp


class KaneDensity(BaseModel):
    effective: SpectralDensity
    amplification: float
    omega0: float


def kane_effective_density(hf: HyperfineSystem, s_lab: SpectralDensity) -> KaneDensity:
    """S_eff = K . S_B . K with K = bb + (1 + 2A/(gamma_n B0))(I - bb).

    Returns:
        Effective density, the transverse amplification (1 + 2A/(gamma_n B0))^2,
        and the nuclear transition frequency.
    """
    K = hf.coupling_matrix()
    effective = SpectralDensity.from_array(
        K @ s_lab.array @ K,
        omega=s_lab.omega,
        convention=s_lab.convention,
        frame=s_lab.frame,
    )
    return KaneDensity(
        effective=effective,
        amplification=hf.transverse_gain**2,
        omega0=hf.omega0,
    )
