"""Tests for the hyperfine-enhanced nuclear noise coupling."""

import math
import unittest

import numpy as np

from magnoise.core.errors import DomainError
from magnoise.kernel import DissipationKernel
from magnoise.noise import HyperfineSystem, kane_effective_density, lab_spectral_density

TWO_PI = 2 * math.pi


def donor(A: float) -> HyperfineSystem:
    return HyperfineSystem(gamma_e=TWO_PI * 28e9, gamma_n=TWO_PI * 17.25e6, A=A, B0=2.0)


def density():
    kernel = DissipationKernel(
        gamma_scalar=1.0, omega=1e8, n_hat=(0.0, 0.6, 0.8), method="quadrature"
    )
    return lab_spectral_density(kernel, temperature=0.1)


class TestHyperfine(unittest.TestCase):
    def test_no_coupling_is_identity(self) -> None:
        s = density()
        out = kane_effective_density(donor(0.0), s)
        np.testing.assert_allclose(out.effective.array, s.array, rtol=1e-14)
        self.assertEqual(out.amplification, 1.0)

    def test_amplification(self) -> None:
        out = kane_effective_density(donor(TWO_PI * 29e6), density())
        self.assertAlmostEqual(out.amplification, (1 + 58 / 34.5) ** 2, places=10)
        self.assertAlmostEqual(out.amplification, 7.189, places=3)

    def test_transverse_block_scales_longitudinal_unchanged(self) -> None:
        hf = donor(TWO_PI * 29e6)
        s = density()
        out = kane_effective_density(hf, s)
        z = (0.0, 0.0, 1.0)
        self.assertAlmostEqual(out.effective.component(z) / s.component(z), 1.0, places=12)
        x = (1.0, 0.0, 0.0)
        self.assertAlmostEqual(
            out.effective.component(x) / s.component(x), out.amplification, places=10
        )

    def test_transition_frequency(self) -> None:
        hf = donor(TWO_PI * 29e6)
        self.assertAlmostEqual(hf.omega0 / (TWO_PI * (34.5e6 + 58e6)), 1.0, places=12)

    def test_zero_field_rejected(self) -> None:
        hf = HyperfineSystem(gamma_e=1.0, gamma_n=1.0, A=1.0, B0=0.0)
        with self.assertRaises(DomainError):
            _ = hf.transverse_gain

    def test_negative_gyromagnetic_ratio_rejected(self) -> None:
        with self.assertRaises(ValueError):
            HyperfineSystem(gamma_e=1.0, gamma_n=-1.0, A=1.0, B0=1.0)


if __name__ == "__main__":
    unittest.main()
