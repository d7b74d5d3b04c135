"""Exception types raised by magnoise."""

from __future__ import annotations

from dataclasses import dataclass


class MagnoiseError(Exception):
    """Base class for all magnoise failures."""


class DomainError(MagnoiseError, ValueError):
    """Raised when an input violates an operation's preconditions."""


@dataclass(frozen=True)
class QuadratureError(MagnoiseError):
    """Raised when an adaptive integral fails to reach its tolerance."""

    message: str
    worst_interval: tuple[float, float]
    abserr: float

    def __str__(self) -> str:
        lo, hi = self.worst_interval
        return f"{self.message} (worst interval [{lo:.6g}, {hi:.6g}], abserr {self.abserr:.3g})"


@dataclass(frozen=True)
class DivergenceError(MagnoiseError):
    """Raised before integrating a kernel whose tail makes the transform diverge."""

    tail_exponent: float
    order: float

    def __str__(self) -> str:
        return (
            f"integral diverges: kernel tail ~ w^{self.tail_exponent:g} is not integrable "
            f"against (w+y)^-{self.order:g}"
        )


@dataclass(frozen=True)
class ResolutionError(MagnoiseError):
    """Raised when a sampled grid is too coarse to resolve a principal value."""

    omega: float
    spacing: float

    def __str__(self) -> str:
        return f"grid spacing {self.spacing:.3g} too coarse near omega={self.omega:.6g}"


@dataclass(frozen=True)
class StepSizeError(MagnoiseError):
    """Raised when the ODE integrator cannot proceed."""

    time: float
    message: str

    def __str__(self) -> str:
        return f"integration failed at t={self.time:.6g}: {self.message}"


@dataclass(frozen=True)
class ConfigError(MagnoiseError):
    """Raised for malformed scenario config files or flag values."""

    message: str
    line: int | None = None
    key: str | None = None

    def __str__(self) -> str:
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.key is not None:
            where.append(f"key '{self.key}'")
        prefix = ", ".join(where)
        return f"{prefix}: {self.message}" if prefix else self.message
