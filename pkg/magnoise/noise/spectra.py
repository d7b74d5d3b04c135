"""Magnetic noise spectral densities in the lab and rotating frames.

Densities are two-sided unless tagged otherwise; the one-sided (engineering)
convention carries an extra factor of two.
"""

from __future__ import annotations

from typing import Literal

import numpy as np
from pydantic import BaseModel

from ..core.model import CONSTANTS, Vector3, thermal_occupation_kernel
from ..kernel.integral import DissipationKernel

Convention = Literal["two-sided", "one-sided"]
Frame = Literal["lab", "rotating"]


class SpectralDensity(BaseModel):
    """3x3 symmetric magnetic spectral density, T^2/Hz."""

    matrix: list[list[float]]
    omega: float
    convention: Convention = "two-sided"
    frame: Frame = "lab"

    @classmethod
    def from_array(
        cls,
        arr: np.ndarray,
        omega: float,
        convention: Convention = "two-sided",
        frame: Frame = "lab",
    ) -> SpectralDensity:
        sym = 0.5 * (arr + arr.T)
        return cls(
            matrix=[[float(x) for x in row] for row in sym],
            omega=omega,
            convention=convention,
            frame=frame,
        )

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.matrix, dtype=float)

    def component(self, axis: Vector3 | np.ndarray) -> float:
        """a . S . a for a unit axis a."""
        a = np.asarray(axis, dtype=float)
        return float(a @ self.array @ a)

    def trace(self) -> float:
        return float(np.trace(self.array))


def lab_spectral_density(
    kernel: DissipationKernel,
    omega: float | None = None,
    temperature: float = 0.0,
) -> SpectralDensity:
    """S_B(omega) = (I + n n) Gamma(omega) hbar omega coth(hbar omega / 2 k_B T).

    Args:
        kernel: Gamma at the frequency of interest
        omega: Frequency for the thermal factor; defaults to ``kernel.omega``.
            Pass 0 for the zero-frequency density, which uses 2 k_B T.
        temperature: Kelvin

    Returns:
        Two-sided lab-frame density
    """
    w = kernel.omega if omega is None else omega
    energy = thermal_occupation_kernel(w, temperature, CONSTANTS)
    return SpectralDensity.from_array(kernel.tensor() * energy, omega=w)


def convention_convert(spectrum: SpectralDensity, target: Convention) -> SpectralDensity:
    """Switch between two-sided and one-sided conventions (one-sided = 2 x two-sided)."""
    if spectrum.convention == target:
        return spectrum
    factor = 2.0 if target == "one-sided" else 0.5
    return spectrum.model_copy(
        update={
            "matrix": [[factor * x for x in row] for row in spectrum.matrix],
            "convention": target,
        }
    )


def projectors(b_hat: Vector3 | np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(b b, I - b b) for a unit axis."""
    b = np.asarray(b_hat, dtype=float)
    longitudinal = np.outer(b, b)
    return longitudinal, np.eye(3) - longitudinal


def rotating_frame_density(
    longitudinal_source: SpectralDensity,
    transverse_source: SpectralDensity,
    b_hat: Vector3 | np.ndarray,
) -> SpectralDensity:
    """Rotating-frame density from lab densities at two frequencies.

    The longitudinal block uses ``longitudinal_source`` (S_B at 0 for T1/T2, at
    omega1 for T1rho); the transverse block uses ``transverse_source``, S_B at
    the precession frequency omega0:

        S_rot = bb tr[bb S(w)] + (I - bb) 1/2 tr[(I - bb) S(w0)]
    """
    s_long = convention_convert(longitudinal_source, "two-sided").array
    s_trans = convention_convert(transverse_source, "two-sided").array
    bb, perp = projectors(b_hat)
    rot = bb * np.trace(bb @ s_long) + perp * 0.5 * np.trace(perp @ s_trans)
    return SpectralDensity.from_array(rot, omega=longitudinal_source.omega, frame="rotating")


def amplitude_density(spectrum: SpectralDensity, axis: Vector3 | np.ndarray) -> float:
    """One-sided amplitude sqrt(a . S . a), T/sqrt(Hz)."""
    one_sided = convention_convert(spectrum, "one-sided")
    return float(np.sqrt(max(one_sided.component(axis), 0.0)))
