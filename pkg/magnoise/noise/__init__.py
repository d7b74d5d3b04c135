"""Noise spectra, relaxation times, Bloch dynamics and hyperfine coupling."""

from .bloch import BlochState, BlochTrajectory, bloch_integrate, fit_decay_rate
from .hyperfine import HyperfineSystem, KaneDensity, kane_effective_density
from .relaxation import (
    RelaxationTimes,
    equilibrium_polarization,
    rates_from_spectra,
    relaxation_times,
)
from .spectra import (
    SpectralDensity,
    amplitude_density,
    convention_convert,
    lab_spectral_density,
    rotating_frame_density,
)

__all__ = [
    "BlochState",
    "BlochTrajectory",
    "HyperfineSystem",
    "KaneDensity",
    "RelaxationTimes",
    "SpectralDensity",
    "amplitude_density",
    "bloch_integrate",
    "convention_convert",
    "equilibrium_polarization",
    "fit_decay_rate",
    "kane_effective_density",
    "lab_spectral_density",
    "rates_from_spectra",
    "relaxation_times",
    "rotating_frame_density",
]
