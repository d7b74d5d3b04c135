"""Discrete independent-oscillator bath and its exact sums.

Each oscillator j has frequency w_j, dimensionless coupling beta_j and axis
n_j. In these units the dissipative kernel is a delta comb,

    Re G(w) = (pi/2) sum_j w_j beta_j^2 n_j n_j delta(w - w_j),   w > 0,

and the spin dissipation tensor is Re G / gamma^2. Every quadrature route in
magnoise has an exact counterpart here.
"""

from __future__ import annotations

import json
import math
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field, field_validator
from scipy import integrate

from ..core.errors import DomainError
from ..core.model import (
    CONSTANTS,
    Vector3,
    thermal_occupation_kernel,
    transverse_basis,
    unit_vector,
)

Geometry = Literal["axis", "slab"]


class Oscillator(BaseModel):
    model_config = {"frozen": True}

    omega: float
    beta: float
    n_hat: Vector3 = (0.0, 0.0, 1.0)

    @field_validator("omega")
    @classmethod
    def _positive(cls, v: float) -> float:
        if not (v > 0 and math.isfinite(v)):
            raise DomainError("oscillator frequency must be positive and finite")
        return v

    @field_validator("n_hat", mode="before")
    @classmethod
    def _normalize(cls, v: Vector3) -> Vector3:
        return unit_vector(v)

    @property
    def strength(self) -> float:
        """w_j beta_j^2, the weight each oscillator adds to C."""
        return self.omega * self.beta**2

    def projector(self) -> np.ndarray:
        n = np.asarray(self.n_hat, dtype=float)
        return np.outer(n, n)


class DiscreteBath(BaseModel):
    """A finite collection of independent oscillators."""

    model_config = {"frozen": True}

    oscillators: list[Oscillator] = Field(default_factory=list)

    def __len__(self) -> int:
        return len(self.oscillators)

    def __add__(self, other: DiscreteBath) -> DiscreteBath:
        return DiscreteBath(oscillators=[*self.oscillators, *other.oscillators])

    @classmethod
    def single(cls, omega: float, beta: float, n_hat: Vector3 = (0.0, 0.0, 1.0)) -> DiscreteBath:
        return cls(oscillators=[Oscillator(omega=omega, beta=beta, n_hat=n_hat)])

    def to_json(self) -> str:
        payload = {"oscillators": [o.model_dump(mode="json") for o in self.oscillators]}
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> DiscreteBath:
        return cls.model_validate(json.loads(text))

    def write(self, path: Path) -> None:
        path.write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def read(cls, path: Path) -> DiscreteBath:
        return cls.from_json(path.read_text(encoding="utf-8"))


class SpectralWeight(BaseModel):
    """Weight matrix of a delta function at omega."""

    omega: float
    matrix: list[list[float]]

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.matrix, dtype=float)


def _matrix(a: np.ndarray) -> list[list[float]]:
    return [[float(x) for x in row] for row in a]


def geometry_tensor(geometry: Geometry, n_hat: Vector3 | np.ndarray) -> np.ndarray:
    """Tensor shape of a scalar kernel: n n ("axis") or I + n n ("slab")."""
    n = np.asarray(unit_vector(n_hat), dtype=float)
    nn = np.outer(n, n)
    if geometry == "axis":
        return nn
    if geometry == "slab":
        return np.eye(3) + nn
    raise DomainError(f"unknown kernel geometry {geometry!r}")


def memory_kernel(bath: DiscreteBath, tau: float) -> np.ndarray:
    """G(tau) = sum_j w_j beta_j^2 cos(w_j tau) n_j n_j for tau >= 0, zero before.

    tau = 0 is taken as the limit from above, which equals the anisotropy tensor C.
    """
    out = np.zeros((3, 3))
    if tau < 0:
        return out
    for osc in bath.oscillators:
        out += osc.strength * math.cos(osc.omega * tau) * osc.projector()
    return out


def anisotropy_tensor(bath: DiscreteBath) -> np.ndarray:
    """C = sum_j w_j beta_j^2 n_j n_j."""
    return memory_kernel(bath, 0.0)


def dissipative_weights(bath: DiscreteBath, gamma: float) -> list[SpectralWeight]:
    """Delta weights of the dissipation tensor: (pi w_j beta_j^2 / 2 gamma^2) n_j n_j."""
    if gamma <= 0:
        raise DomainError("gyromagnetic ratio must be positive")
    return [
        SpectralWeight(
            omega=o.omega,
            matrix=_matrix(math.pi * o.strength / (2.0 * gamma**2) * o.projector()),
        )
        for o in bath.oscillators
    ]


def bath_spectral_weights(
    bath: DiscreteBath, temperature: float, gamma: float
) -> list[SpectralWeight]:
    """Delta weights of the field noise S_B: dissipative weight times hbar w coth(hbar w/2kT)."""
    out = []
    for w in dissipative_weights(bath, gamma):
        energy = thermal_occupation_kernel(w.omega, temperature)
        out.append(SpectralWeight(omega=w.omega, matrix=_matrix(energy * w.array)))
    return out


def bath_memory_kernel_fourier(bath: DiscreteBath, edges: Sequence[float]) -> list[np.ndarray]:
    """Integral of Re G over each bin [edges[i], edges[i+1]).

    The last bin is closed on the right so a grid's top edge is included.
    """
    edges = [float(e) for e in edges]
    bins = [np.zeros((3, 3)) for _ in range(len(edges) - 1)]
    for osc in bath.oscillators:
        for i, (lo, hi) in enumerate(zip(edges[:-1], edges[1:], strict=True)):
            last = i == len(bins) - 1
            if lo <= osc.omega < hi or (last and osc.omega == hi):
                bins[i] += 0.5 * math.pi * osc.strength * osc.projector()
                break
    return bins


_SLAB_AXES = "slab"


def _axes_for(
    axes: Sequence[tuple[Vector3, float]] | str | None, n_hat: Vector3
) -> list[tuple[Vector3, float]]:
    if axes is None or axes == "axis":
        return [(unit_vector(n_hat), 1.0)]
    if axes == _SLAB_AXES:
        u, v, n = transverse_basis(n_hat)
        return [(unit_vector(n), 2.0), (unit_vector(u), 1.0), (unit_vector(v), 1.0)]
    if isinstance(axes, str):
        raise DomainError(f"unknown axes preset {axes!r}")
    return [(unit_vector(a), float(w)) for a, w in axes]


def sample_bath_from_gamma(
    gamma_fn: Callable[[float], float],
    grid: Sequence[float] | np.ndarray,
    gamma: float,
    axes: Sequence[tuple[Vector3, float]] | str | None = None,
    n_hat: Vector3 = (0.0, 0.0, 1.0),
) -> DiscreteBath:
    """Discretize a scalar dissipation kernel into a bath, one oscillator per bin and axis.

    Each bin's oscillator sits at the Gamma-weighted centroid and its coupling is
    chosen so that (pi/2) w_j beta_j^2 = weight * gamma^2 * integral_bin Gamma.

    Args:
        gamma_fn: Gamma(w) >= 0, scalar
        grid: Increasing bin edges, rad/s
        gamma: Gyromagnetic ratio, rad/(s T)
        axes: (axis, weight) pairs giving the tensor shape sum weight * a a;
            "axis" (default) is n n and "slab" is I + n n
        n_hat: Axis used by the presets

    Returns:
        DiscreteBath with at most len(grid) - 1 oscillators per axis
    """
    if gamma <= 0:
        raise DomainError("gyromagnetic ratio must be positive")
    edges = np.asarray(grid, dtype=float)
    if edges.ndim != 1 or edges.size < 2 or np.any(np.diff(edges) <= 0) or edges[0] < 0:
        raise DomainError("grid must be an increasing sequence of non-negative frequencies")
    samples = [float(gamma_fn(float(w))) for w in edges]
    if min(samples) < 0:
        raise DomainError("Gamma must be non-negative on the grid")
    shape = _axes_for(axes, n_hat)

    oscillators: list[Oscillator] = []
    for lo, hi in zip(edges[:-1], edges[1:], strict=True):
        area = integrate.quad(gamma_fn, lo, hi, epsrel=1e-12, limit=200)[0]
        if area < 0:
            raise DomainError(f"Gamma integrates negative on [{lo:.6g}, {hi:.6g}]")
        if area == 0:
            continue
        moment = integrate.quad(lambda w: w * gamma_fn(w), lo, hi, epsrel=1e-12, limit=200)[0]
        centroid = min(max(moment / area, lo), hi)
        if centroid <= 0:
            continue
        for axis, weight in shape:
            beta_sq = 2.0 * weight * gamma**2 * area / (math.pi * centroid)
            oscillators.append(Oscillator(omega=centroid, beta=math.sqrt(beta_sq), n_hat=axis))
    return DiscreteBath(oscillators=oscillators)


def exact_entanglement_sum(
    bath: DiscreteBath,
    p_hat: Vector3,
    omega0: float,
    hbar: float = CONSTANTS.hbar,
) -> float:
    """sum_j hbar w_j^2 beta_j^2 / (8 (w0 + w_j)^2) tr[(I - p p) n_j n_j]."""
    if omega0 <= 0:
        raise DomainError("omega0 must be positive")
    p = np.asarray(unit_vector(p_hat), dtype=float)
    total = 0.0
    for osc in bath.oscillators:
        overlap = float(np.dot(p, osc.n_hat))
        total += (
            hbar * osc.omega**2 * osc.beta**2 / (8.0 * (omega0 + osc.omega) ** 2)
        ) * (1.0 - overlap**2)
    return total


class OscillatorSums(BaseModel):
    entanglement: float
    frequency_ratio: float
    anisotropy: list[list[float]]


def exact_oscillator_sums(bath: DiscreteBath, omega0: float) -> OscillatorSums:
    """Entanglement, frequency renormalization and C for a harmonic oscillator.

        E              = sum_j w_j^2 beta_j^2 / (4 (w0 + w_j)^2)
        (w0' / w0)^2   = 1 + sum_j w_j beta_j^2 / w0
    """
    if omega0 <= 0:
        raise DomainError("omega0 must be positive")
    ent = sum(o.omega**2 * o.beta**2 / (4.0 * (omega0 + o.omega) ** 2) for o in bath.oscillators)
    shift = sum(o.strength for o in bath.oscillators) / omega0
    return OscillatorSums(
        entanglement=ent,
        frequency_ratio=math.sqrt(1.0 + shift),
        anisotropy=_matrix(anisotropy_tensor(bath)),
    )
