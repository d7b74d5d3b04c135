"""Zero-temperature entanglement and renormalization from dissipative kernels.

A spin-1/2 or harmonic oscillator coupled to a reservoir is, at T = 0, found
outside its isolated ground state with probability E. E is a Stieltjes
transform of order 2 of w times the dissipative kernel; the renormalization
terms are plain integrals of the same kernel.
"""

from __future__ import annotations

import math
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field

from ..config import CUTOFF_RATIO_WARN, PERTURBATIVE_WARN, STIELTJES_REL_TOL
from ..core.errors import DomainError
from ..core.model import CONSTANTS, Material, SlabSystem, SpinContext, Vector3, unit_vector
from ..kernel.asymptotic import gamma_interpolated
from ..kernel.integral import DissipationKernel, QuadratureConfig, gamma_at
from .bath import (
    DiscreteBath,
    Geometry,
    anisotropy_tensor,
    exact_entanglement_sum,
    exact_oscillator_sums,
    geometry_tensor,
)
from .stieltjes import FrequencyKernel, StieltjesSpec, stieltjes_transform, weighted_integral

EntanglementMethod = Literal["exact-quadrature", "approximate", "discrete-sum"]

# Gamma(w) ~ lambda^3 ~ w^-3/2 once the skin depth is below every slab length
THERMAL_TAIL_EXPONENT = -1.5


class EntanglementResult(BaseModel):
    """Probability E of leaving the isolated ground state at T = 0."""

    E: float
    method: EntanglementMethod
    omega0: float
    warnings: list[str] = Field(default_factory=list)


def _result(E: float, method: EntanglementMethod, omega0: float) -> EntanglementResult:
    result = EntanglementResult(E=E, method=method, omega0=omega0)
    if E > PERTURBATIVE_WARN:
        result.warnings.append(
            f"E = {E:.3g} exceeds {PERTURBATIVE_WARN}; first-order perturbation theory is suspect"
        )
    return result


def _check_omega0(omega0: float) -> None:
    if not omega0 > 0:
        raise DomainError("omega0 must be positive")


def angular_factor(p_hat: Vector3, n_hat: Vector3, geometry: Geometry = "slab") -> float:
    """tr[(I - p p) T] for the kernel's tensor shape T."""
    p = np.asarray(unit_vector(p_hat), dtype=float)
    perp = np.eye(3) - np.outer(p, p)
    return float(np.trace(perp @ geometry_tensor(geometry, n_hat)))


def spin_entanglement(
    p_hat: Vector3,
    omega0: float,
    gamma: float,
    dissipation: FrequencyKernel | DiscreteBath,
    n_hat: Vector3 = (0.0, 0.0, 1.0),
    geometry: Geometry = "slab",
    hbar: float = CONSTANTS.hbar,
    rel_tol: float = STIELTJES_REL_TOL,
) -> EntanglementResult:
    """E = (gamma^2 hbar / 4 pi) G_2{w tr[(I - p p) Gamma(w)]; w0}.

    Args:
        p_hat: Ground-state polarization axis of the isolated spin
        omega0: Precession frequency, rad/s
        gamma: Gyromagnetic ratio, rad/(s T)
        dissipation: Scalar Gamma(w) with tail metadata, or a discrete bath
            (summed exactly, no quadrature)
        n_hat: Slab normal that orients the scalar kernel
        geometry: Tensor shape of the scalar kernel
        hbar: Value of hbar, overridable for natural-unit checks
        rel_tol: Stieltjes quadrature tolerance

    Returns:
        EntanglementResult with a perturbative-validity warning above 0.1
    """
    _check_omega0(omega0)
    if gamma <= 0:
        raise DomainError("gyromagnetic ratio must be positive")
    if isinstance(dissipation, DiscreteBath):
        E = exact_entanglement_sum(dissipation, p_hat, omega0, hbar=hbar)
        return _result(E, "discrete-sum", omega0)

    spec = StieltjesSpec(kernel=dissipation.times_omega(), shift=omega0, rel_tol=rel_tol)
    transform = stieltjes_transform(spec)
    E = gamma**2 * hbar / (4.0 * math.pi) * angular_factor(p_hat, n_hat, geometry) * transform
    return _result(max(E, 0.0), "exact-quadrature", omega0)


def t1_zero_temperature(ctx: SpinContext, kernel: DissipationKernel) -> float:
    """T1 at T = 0: 1/T1 = (1/2) gamma^2 (3 - cos^2 theta) Gamma(w0) hbar w0."""
    c = ctx.cos_theta(kernel.n_hat)
    rate = 0.5 * ctx.gamma**2 * (3.0 - c * c) * kernel.gamma_scalar * CONSTANTS.hbar * ctx.omega0
    if rate <= 0:
        return math.inf
    return 1.0 / rate


def approximate_entanglement(omega0: float, omega_c: float, t1: float) -> EntanglementResult:
    """E ~ ln(w_c / w0) / (2 pi w0 T1), with T1 taken at zero temperature.

    Treats Gamma as flat up to the cutoff w_c; good to about 1/ln(w_c/w0).
    """
    _check_omega0(omega0)
    if omega_c < omega0:
        raise DomainError("cutoff must not be below omega0")
    if not t1 > 0:
        raise DomainError("T1 must be positive")
    E = math.log(omega_c / omega0) / (2.0 * math.pi * omega0 * t1) if math.isfinite(t1) else 0.0
    result = _result(E, "approximate", omega0)
    if omega_c < CUTOFF_RATIO_WARN * omega0:
        result.warnings.append(
            f"cutoff ratio {omega_c / omega0:.3g} below {CUTOFF_RATIO_WARN:g}; "
            "the logarithmic approximation is unreliable"
        )
    return result


def oscillator_entanglement(
    mu_kernel: FrequencyKernel | DiscreteBath,
    omega0: float,
    rel_tol: float = STIELTJES_REL_TOL,
) -> EntanglementResult:
    """E = (1/2 pi) G_2{w Re mu(w); w0} for a damped harmonic oscillator."""
    _check_omega0(omega0)
    if isinstance(mu_kernel, DiscreteBath):
        sums = exact_oscillator_sums(mu_kernel, omega0)
        return _result(sums.entanglement, "discrete-sum", omega0)
    spec = StieltjesSpec(kernel=mu_kernel.times_omega(), shift=omega0, rel_tol=rel_tol)
    E = stieltjes_transform(spec) / (2.0 * math.pi)
    return _result(max(E, 0.0), "exact-quadrature", omega0)


def ohmic_approx(Q: float, omega_c: float, omega0: float) -> EntanglementResult:
    """E ~ ln(w_c / w0) / (2 pi Q) for an ohmic oscillator of quality factor Q."""
    _check_omega0(omega0)
    if not Q > 0:
        raise DomainError("quality factor must be positive")
    if omega_c < omega0:
        raise DomainError("cutoff must not be below omega0")
    result = _result(math.log(omega_c / omega0) / (2.0 * math.pi * Q), "approximate", omega0)
    if omega_c < CUTOFF_RATIO_WARN * omega0:
        result.warnings.append(f"cutoff ratio {omega_c / omega0:.3g} below {CUTOFF_RATIO_WARN:g}")
    return result


class RenormalizationResult(BaseModel):
    """Reservoir-induced shifts; none of them depends on temperature.

    ``frequency_ratio`` is w0'/w0 for an oscillator (present when omega0 was
    given); ``anisotropy`` is the spin anisotropy tensor C.
    """

    frequency_ratio: float | None = None
    anisotropy: list[list[float]]

    @property
    def anisotropy_array(self) -> np.ndarray:
        return np.asarray(self.anisotropy, dtype=float)


def renormalization(
    source: FrequencyKernel | DiscreteBath,
    omega0: float | None = None,
    n_hat: Vector3 = (0.0, 0.0, 1.0),
    geometry: Geometry = "axis",
    rel_tol: float = STIELTJES_REL_TOL,
) -> RenormalizationResult:
    """Renormalization-dissipation relations.

        (w0' / w0)^2 = 1 + (2 / (pi w0)) integral_0^inf Re mu(w) dw
        C            = (2 / pi) integral_0^inf Re G(w) dw

    A scalar kernel serves as Re mu for the frequency ratio and, shaped by
    ``geometry`` around ``n_hat``, as Re G for C.

    Raises:
        DivergenceError: the kernel is not integrable at high frequency
    """
    if isinstance(source, DiscreteBath):
        C = anisotropy_tensor(source)
        ratio = None
        if omega0 is not None:
            ratio = exact_oscillator_sums(source, omega0).frequency_ratio
        return RenormalizationResult(
            frequency_ratio=ratio, anisotropy=[[float(x) for x in row] for row in C]
        )

    if omega0 is not None:
        _check_omega0(omega0)
    scale = omega0 if omega0 is not None else (source.cutoff or 1.0)
    area = weighted_integral(source, 0.0, scale, rel_tol)
    C = (2.0 / math.pi) * area * geometry_tensor(geometry, n_hat)
    ratio = None
    if omega0 is not None:
        squared = 1.0 + 2.0 * area / (math.pi * omega0)
        if squared <= 0:
            raise DomainError("renormalized frequency squared is not positive")
        ratio = math.sqrt(squared)
    return RenormalizationResult(
        frequency_ratio=ratio, anisotropy=[[float(x) for x in row] for row in C]
    )


GammaMethod = Literal["quadrature", "interpolated"]


def gamma_callable(
    slab: SlabSystem,
    material: Material,
    method: GammaMethod = "interpolated",
    cutoff: float | None = None,
    cfg: QuadratureConfig | None = None,
) -> FrequencyKernel:
    """Thermal-magnetic Gamma(w) as a kernel for the Stieltjes machinery.

    Without a cutoff the kernel advertises the w^-3/2 thin-skin tail, which
    makes every transform here absolutely convergent.
    """
    if method == "interpolated":

        def func(w: float) -> float:
            return gamma_interpolated(slab, material, w).gamma_scalar

    elif method == "quadrature":

        def func(w: float) -> float:
            return gamma_at(slab, material, w, cfg).gamma_scalar

    else:
        raise DomainError(f"unknown Gamma method {method!r}")
    return FrequencyKernel(
        func=func,
        tail_exponent=None if cutoff is not None else THERMAL_TAIL_EXPONENT,
        cutoff=cutoff,
        label=f"gamma-{method}",
    )
