"""Generalized Stieltjes transforms of frequency kernels.

    G_r{f(x); y} = integral_0^inf f(x) (x + y)^(-r) dx

Kernels carry their large-frequency power law (or a hard cutoff) so that
divergent transforms are rejected before any quadrature runs.
"""

from __future__ import annotations

import math
from collections.abc import Callable

from pydantic import BaseModel, Field
from scipy import integrate

from ..config import STIELTJES_REL_TOL
from ..core.errors import DivergenceError, DomainError, QuadratureError


class FrequencyKernel(BaseModel):
    """A real function of angular frequency on (0, inf).

    ``tail_exponent`` p states f(w) ~ w^p as w -> inf; ``cutoff`` states
    f(w) = 0 for w > cutoff. ``breakpoints`` lists interior kinks.
    """

    model_config = {"arbitrary_types_allowed": True}

    func: Callable[[float], float] = Field(exclude=True)
    tail_exponent: float | None = None
    cutoff: float | None = None
    breakpoints: list[float] = Field(default_factory=list)
    label: str = "kernel"

    def __call__(self, omega: float) -> float:
        if self.cutoff is not None and omega > self.cutoff:
            return 0.0
        return float(self.func(omega))

    def times_omega(self) -> FrequencyKernel:
        """The kernel w f(w), whose tail exponent is one higher."""
        return FrequencyKernel(
            func=lambda w: w * self.func(w),
            tail_exponent=None if self.tail_exponent is None else self.tail_exponent + 1.0,
            cutoff=self.cutoff,
            breakpoints=list(self.breakpoints),
            label=f"w*{self.label}",
        )

    def scaled(self, factor: float) -> FrequencyKernel:
        return FrequencyKernel(
            func=lambda w: factor * self.func(w),
            tail_exponent=self.tail_exponent,
            cutoff=self.cutoff,
            breakpoints=list(self.breakpoints),
            label=f"{factor:g}*{self.label}",
        )


def flat_kernel(value: float, cutoff: float, label: str = "flat") -> FrequencyKernel:
    """f(w) = value on (0, cutoff), zero above."""
    return FrequencyKernel(func=lambda _w: value, cutoff=cutoff, label=label)


class StieltjesSpec(BaseModel):
    kernel: FrequencyKernel
    order: float = Field(default=2.0, ge=1.0)
    shift: float = Field(gt=0.0)
    rel_tol: float = Field(default=STIELTJES_REL_TOL, gt=0.0)


def check_convergence(kernel: FrequencyKernel, order: float) -> None:
    """Raise DivergenceError unless f(w) (w + y)^-order is integrable at inf."""
    if kernel.cutoff is not None:
        return
    if kernel.tail_exponent is None:
        raise DomainError(
            f"kernel {kernel.label!r} has neither a cutoff nor a tail exponent; "
            "convergence cannot be decided"
        )
    if kernel.tail_exponent - order >= -1.0:
        raise DivergenceError(tail_exponent=kernel.tail_exponent, order=order)


def _edges(kernel: FrequencyKernel, shift: float) -> list[float]:
    """Decade panels around the shift, plus the kernel's own breakpoints."""
    pts = {shift}
    lo = shift * 1e-8
    x = lo
    while x < shift:
        pts.add(x)
        x *= 10.0
    upper = kernel.cutoff if kernel.cutoff is not None else shift * 1e12
    x = shift * 10.0
    while x < upper:
        pts.add(x)
        x *= 10.0
    pts.add(upper)
    pts.update(b for b in kernel.breakpoints if 0.0 < b < upper)
    return [0.0] + sorted(p for p in pts if 0.0 < p <= upper)


def stieltjes_transform(spec: StieltjesSpec) -> float:
    """Evaluate G_r{f; y} by panel quadrature with an analytic power-law tail.

    Raises:
        DomainError: the kernel carries no tail metadata and no cutoff
        DivergenceError: the kernel's tail makes the integral diverge
        QuadratureError: a panel fails and the total misses the tolerance
    """
    return weighted_integral(spec.kernel, spec.order, spec.shift, spec.rel_tol)


def weighted_integral(
    kernel: FrequencyKernel, order: float, y: float, rel_tol: float = STIELTJES_REL_TOL
) -> float:
    """integral_0^inf f(x) (x + y)^-order dx for any order >= 0.

    Order 0 gives the plain integral of f; y then only places the panels.
    """
    if not y > 0:
        raise DomainError("shift must be positive")
    check_convergence(kernel, order)

    def integrand(x: float) -> float:
        return kernel(x) * (x + y) ** (-order)

    edges = _edges(kernel, y)
    total = 0.0
    abserr = 0.0
    worst = (edges[0], edges[1])
    worst_err = -1.0
    failed = False
    for lo, hi in zip(edges[:-1], edges[1:], strict=True):
        res = integrate.quad(
            integrand, lo, hi, epsabs=0.0, epsrel=rel_tol * 1e-2, limit=200, full_output=1
        )
        val, err = float(res[0]), float(res[1])
        failed = failed or len(res) > 3
        if err > worst_err:
            worst, worst_err = (lo, hi), err
        total += val
        abserr += err

    if kernel.cutoff is None:
        # f ~ w^p beyond the last edge: integral of w^(p-r) from X to inf
        X = edges[-1]
        p = kernel.tail_exponent if kernel.tail_exponent is not None else 0.0
        tail = kernel(X) * (X + y) ** (-order) * X / (order - p - 1.0)
        total += tail
        abserr += abs(tail) * 1e-2

    if failed and abserr > rel_tol * max(abs(total), 1e-300):
        raise QuadratureError("Stieltjes transform did not converge", worst, abserr)
    if not math.isfinite(total):
        raise QuadratureError("Stieltjes transform is not finite", worst, math.inf)
    return total


def flat_stieltjes_closed_form(value: float, cutoff: float, shift: float) -> float:
    """G_2{value * x on (0, cutoff); shift} in closed form."""
    return value * (math.log1p(cutoff / shift) - cutoff / (shift + cutoff))
