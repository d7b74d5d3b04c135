"""Tests for lab and rotating-frame spectral densities."""

from __future__ import annotations

import math
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from magnoise.core.model import CONSTANTS, thermal_occupation_kernel
from magnoise.kernel import DissipationKernel
from magnoise.noise import (
    amplitude_density,
    convention_convert,
    lab_spectral_density,
    rotating_frame_density,
)


def kernel(gamma: float = 2.0, omega: float = 5.0, n_hat=(0.0, 0.0, 1.0)) -> DissipationKernel:
    return DissipationKernel(gamma_scalar=gamma, omega=omega, n_hat=n_hat, method="quadrature")


class TestLabDensity(unittest.TestCase):
    def test_vanishes_at_zero_temperature_and_frequency(self) -> None:
        s = lab_spectral_density(kernel(), omega=0.0, temperature=0.0)
        np.testing.assert_array_equal(s.array, np.zeros((3, 3)))

    def test_normal_component_is_twice_gamma_times_energy(self) -> None:
        s = lab_spectral_density(kernel(gamma=3.0, omega=1e9), temperature=4.0)
        energy = thermal_occupation_kernel(1e9, 4.0)
        self.assertAlmostEqual(s.component((0, 0, 1)) / (2 * 3.0 * energy), 1.0, places=12)
        self.assertAlmostEqual(s.component((1, 0, 0)) / (3.0 * energy), 1.0, places=12)

    def test_zero_frequency_uses_two_kt(self) -> None:
        s = lab_spectral_density(kernel(gamma=1.0), omega=0.0, temperature=10.0)
        self.assertAlmostEqual(s.trace() / (4 * 2 * CONSTANTS.k_B * 10.0), 1.0, places=12)
        self.assertEqual(s.omega, 0.0)

    @settings(max_examples=50, deadline=None)
    @given(
        st.floats(min_value=0.0, max_value=1e3),
        st.tuples(
            st.floats(min_value=-1, max_value=1),
            st.floats(min_value=-1, max_value=1),
            st.floats(min_value=-1, max_value=1),
        ).filter(lambda v: math.hypot(*v) > 1e-2),
        st.floats(min_value=0.0, max_value=1e12),
        st.floats(min_value=0.0, max_value=300.0),
    )
    def test_positive_semidefinite(self, gamma, n, omega, temperature) -> None:
        n_hat = tuple(np.asarray(n) / math.hypot(*n))
        s = lab_spectral_density(kernel(gamma, omega, n_hat), temperature=temperature)
        scale = max(s.trace(), 1e-300)
        self.assertGreaterEqual(np.linalg.eigvalsh(s.array).min() / scale, -1e-12)


class TestConventions(unittest.TestCase):
    def test_one_sided_doubles(self) -> None:
        s = lab_spectral_density(kernel(), temperature=1.0)
        one = convention_convert(s, "one-sided")
        np.testing.assert_allclose(one.array, 2 * s.array)
        self.assertEqual(one.convention, "one-sided")

    def test_round_trip_is_identity(self) -> None:
        s = lab_spectral_density(kernel(), temperature=1.0)
        back = convention_convert(convention_convert(s, "one-sided"), "two-sided")
        np.testing.assert_allclose(back.array, s.array, rtol=1e-15)
        self.assertIs(convention_convert(s, "two-sided"), s)

    def test_amplitude_density_is_one_sided(self) -> None:
        s = lab_spectral_density(kernel(gamma=1.0), omega=0.0, temperature=10.0)
        expected = math.sqrt(2 * s.component((1, 0, 0)))
        self.assertAlmostEqual(amplitude_density(s, (1, 0, 0)) / expected, 1.0, places=12)


class TestRotatingFrame(unittest.TestCase):
    def setUp(self) -> None:
        self.temperature = 2.0
        self.e0 = 2 * CONSTANTS.k_B * self.temperature
        self.ew = thermal_occupation_kernel(1e10, self.temperature)

    def densities(self, n_hat):
        s0 = lab_spectral_density(kernel(1.0, 0.0, n_hat), omega=0.0, temperature=self.temperature)
        sw = lab_spectral_density(kernel(1.0, 1e10, n_hat), temperature=self.temperature)
        return s0, sw

    def test_field_along_normal(self) -> None:
        s0, sw = self.densities((0.0, 0.0, 1.0))
        rot = rotating_frame_density(s0, sw, (0.0, 0.0, 1.0))
        self.assertEqual(rot.frame, "rotating")
        self.assertAlmostEqual(rot.component((0, 0, 1)) / (2 * self.e0), 1.0, places=12)
        self.assertAlmostEqual(rot.component((1, 0, 0)) / self.ew, 1.0, places=12)

    def test_field_in_plane(self) -> None:
        s0, sw = self.densities((0.0, 0.0, 1.0))
        rot = rotating_frame_density(s0, sw, (1.0, 0.0, 0.0))
        self.assertAlmostEqual(rot.component((1, 0, 0)) / self.e0, 1.0, places=12)
        self.assertAlmostEqual(rot.component((0, 1, 0)) / (1.5 * self.ew), 1.0, places=12)
        self.assertAlmostEqual(rot.component((0, 0, 1)) / (1.5 * self.ew), 1.0, places=12)

    def test_accepts_one_sided_inputs(self) -> None:
        s0, sw = self.densities((0.0, 0.0, 1.0))
        a = rotating_frame_density(s0, sw, (0.0, 0.0, 1.0))
        b = rotating_frame_density(
            convention_convert(s0, "one-sided"), convention_convert(sw, "one-sided"), (0, 0, 1)
        )
        np.testing.assert_allclose(a.array, b.array, rtol=1e-14)


if __name__ == "__main__":
    unittest.main()
