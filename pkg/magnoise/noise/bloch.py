"""Rotating-frame Bloch equation with T1/T2 relaxation."""

from __future__ import annotations

import math

import numpy as np
from pydantic import BaseModel, Field
from scipy.integrate import solve_ivp
from scipy.optimize import curve_fit

from ..config import ODE_RTOL
from ..core.errors import DomainError, StepSizeError
from ..core.model import SpinContext, Vector3
from .relaxation import RelaxationTimes, equilibrium_polarization
from .spectra import projectors


class BlochState(BaseModel):
    """Spin polarization <s> in units of hbar at time t (s)."""

    s: Vector3
    time: float = 0.0

    @property
    def vector(self) -> np.ndarray:
        return np.asarray(self.s, dtype=float)


class BlochTrajectory(BaseModel):
    times: list[float]
    states: list[Vector3]
    warnings: list[str] = Field(default_factory=list)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.states, dtype=float)

    def longitudinal(self, b_hat: Vector3 | np.ndarray) -> np.ndarray:
        return self.as_array() @ np.asarray(b_hat, dtype=float)

    def transverse_magnitude(self, b_hat: Vector3 | np.ndarray) -> np.ndarray:
        _, perp = projectors(b_hat)
        return np.linalg.norm(self.as_array() @ perp, axis=1)


def bloch_integrate(
    state0: BlochState,
    ctx: SpinContext,
    times: RelaxationTimes,
    duration: float,
    n_samples: int = 201,
    rtol: float = ODE_RTOL,
    method: str = "DOP853",
) -> BlochTrajectory:
    """Integrate d<s>/dt = -(1/T1) bb (<s> - <s0>) - (1/T2)(I - bb) <s>.

    Args:
        state0: Initial polarization and time
        ctx: Spin context (axis, field, temperature for <s0>)
        times: Relaxation rates
        duration: Integration span, s
        n_samples: Output samples, evenly spaced and including both ends
        rtol: Local relative tolerance of the embedded Runge-Kutta pair
        method: solve_ivp method name

    Returns:
        Sampled trajectory
    """
    if not duration > 0:
        raise DomainError("duration must be positive")
    if not (math.isfinite(times.rate1) and math.isfinite(times.rate2)):
        raise DomainError("relaxation rates must be finite")

    bb, perp = projectors(ctx.b_hat)
    s0 = equilibrium_polarization(ctx)
    generator = times.rate1 * bb + times.rate2 * perp
    drive = times.rate1 * (bb @ s0)

    def rhs(_t: float, s: np.ndarray) -> np.ndarray:
        return drive - generator @ s

    t0 = state0.time
    t_eval = np.linspace(t0, t0 + duration, n_samples)
    sol = solve_ivp(
        rhs,
        (t0, t0 + duration),
        state0.vector,
        method=method,
        t_eval=t_eval,
        rtol=rtol,
        atol=rtol * 1e-6,
    )
    if sol.status != 0:
        t_fail = float(sol.t[-1]) if sol.t.size else t0
        raise StepSizeError(time=t_fail, message=str(sol.message))

    trajectory = BlochTrajectory(
        times=[float(t) for t in sol.t],
        states=[(float(x), float(y), float(z)) for x, y, z in sol.y.T],
    )
    if np.max(np.linalg.norm(sol.y, axis=0)) > 0.5 * (1.0 + 1e-6):
        trajectory.warnings.append("|<s>| exceeded hbar/2 during integration")
    return trajectory


def fit_decay_rate(times: np.ndarray, values: np.ndarray) -> float:
    """Least-squares fit of values = a exp(-r t), returning r."""
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    span = times[-1] - times[0]
    guess = math.log(values[0] / values[-1]) / span if values[-1] > 0 else 1.0 / span

    def model(t: np.ndarray, a: float, r: float) -> np.ndarray:
        return a * np.exp(-r * (t - times[0]))

    popt, _ = curve_fit(model, times, values, p0=(values[0], guess), maxfev=10_000)
    return float(popt[1])
