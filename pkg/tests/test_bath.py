"""Tests for the discrete oscillator bath."""

from __future__ import annotations

import math
import tempfile
import unittest
from pathlib import Path

import numpy as np

from magnoise.core.errors import DomainError
from magnoise.core.model import CONSTANTS
from magnoise.quantum import (
    DiscreteBath,
    FrequencyKernel,
    Oscillator,
    anisotropy_tensor,
    bath_memory_kernel_fourier,
    bath_spectral_weights,
    dissipative_weights,
    exact_entanglement_sum,
    flat_stieltjes_closed_form,
    geometry_tensor,
    memory_kernel,
    sample_bath_from_gamma,
    spin_entanglement,
)


def two_mode_bath() -> DiscreteBath:
    return DiscreteBath(
        oscillators=[
            Oscillator(omega=1.0, beta=0.1, n_hat=(1.0, 0.0, 0.0)),
            Oscillator(omega=2.5, beta=0.3, n_hat=(0.0, 0.0, 2.0)),
        ]
    )


class TestMemoryKernel(unittest.TestCase):
    def test_equal_time_value_is_anisotropy(self) -> None:
        bath = two_mode_bath()
        np.testing.assert_array_equal(memory_kernel(bath, 0.0), anisotropy_tensor(bath))
        np.testing.assert_allclose(np.diag(anisotropy_tensor(bath)), [0.01, 0.0, 0.225])

    def test_causal(self) -> None:
        np.testing.assert_array_equal(memory_kernel(two_mode_bath(), -0.1), np.zeros((3, 3)))

    def test_oscillates(self) -> None:
        bath = DiscreteBath.single(omega=2.0, beta=1.0)
        self.assertAlmostEqual(memory_kernel(bath, math.pi / 2)[2, 2], -2.0)


class TestWeights(unittest.TestCase):
    def test_fourier_bins_hold_total_weight(self) -> None:
        bath = two_mode_bath()
        bins = bath_memory_kernel_fourier(bath, [0.0, 1.0, 2.0, 2.5])
        self.assertEqual(len(bins), 3)
        np.testing.assert_allclose(bins[0], np.zeros((3, 3)))
        np.testing.assert_allclose(sum(bins), 0.5 * math.pi * anisotropy_tensor(bath))

    def test_dissipative_weights(self) -> None:
        weights = dissipative_weights(DiscreteBath.single(omega=2.0, beta=0.5), gamma=2.0)
        self.assertEqual(weights[0].omega, 2.0)
        self.assertAlmostEqual(weights[0].array[2, 2], math.pi * 0.5 / 8.0)

    def test_zero_temperature_noise_weights(self) -> None:
        bath = DiscreteBath.single(omega=2.0, beta=0.5)
        noise = bath_spectral_weights(bath, 0.0, gamma=2.0)
        dissipative = dissipative_weights(bath, gamma=2.0)
        ratio = noise[0].array[2, 2] / dissipative[0].array[2, 2]
        self.assertAlmostEqual(ratio / (CONSTANTS.hbar * 2.0), 1.0, places=9)

    def test_rejects_non_positive_gamma(self) -> None:
        with self.assertRaises(DomainError):
            dissipative_weights(two_mode_bath(), gamma=0.0)


class TestSampling(unittest.TestCase):
    def test_flat_kernel_preserves_area(self) -> None:
        grid = np.linspace(0.0, 4.0, 5)
        bath = sample_bath_from_gamma(lambda w: 0.5, grid, gamma=3.0)
        self.assertEqual(len(bath), 4)
        centroids = [o.omega for o in bath.oscillators]
        np.testing.assert_allclose(centroids, [0.5, 1.5, 2.5, 3.5])
        total = sum(bath_memory_kernel_fourier(bath, grid))
        np.testing.assert_allclose(total[2, 2], 9.0 * 0.5 * 4.0, rtol=1e-10)

    def _refinement_errors(self, gamma_fn, cutoff: float, exact: float) -> list[float]:
        errors = []
        for bins in (64, 128, 256):
            grid = np.linspace(0.0, cutoff, bins + 1)
            bath = sample_bath_from_gamma(gamma_fn, grid, gamma=1.0)
            E = exact_entanglement_sum(bath, (1.0, 0.0, 0.0), 1.0, hbar=1.0)
            errors.append(abs(E - exact))
        return errors

    def test_entanglement_converges_as_grid_halves(self) -> None:
        exact = flat_stieltjes_closed_form(1.0, 10.0, 1.0) / (4.0 * math.pi)
        errors = self._refinement_errors(lambda w: 1.0, 10.0, exact)
        for coarse, fine in zip(errors, errors[1:]):
            # at least first order; the centroid rule gives second
            self.assertGreater(coarse / fine, 2.0)
            self.assertAlmostEqual(coarse / fine, 4.0, delta=0.5)

    def test_sloped_kernel_converges_as_grid_halves(self) -> None:
        kernel = FrequencyKernel(func=lambda w: math.exp(-w), cutoff=20.0)
        exact = spin_entanglement((1.0, 0.0, 0.0), 1.0, 1.0, kernel, geometry="axis", hbar=1.0).E
        errors = self._refinement_errors(kernel, 20.0, exact)
        self.assertEqual(errors, sorted(errors, reverse=True))
        self.assertGreater(errors[0] / errors[-1], 4.0)

    def test_slab_axes_triple_the_oscillators(self) -> None:
        grid = [0.0, 1.0, 2.0]
        bath = sample_bath_from_gamma(lambda w: 1.0, grid, gamma=1.0, axes="slab")
        self.assertEqual(len(bath), 6)
        C = anisotropy_tensor(bath)
        np.testing.assert_allclose(C / C[0, 0], geometry_tensor("slab", (0, 0, 1)), atol=1e-12)

    def test_zero_bins_are_skipped(self) -> None:
        bath = sample_bath_from_gamma(lambda w: 0.0 if w < 1.0 else 1.0, [0.0, 1.0, 2.0], 1.0)
        self.assertEqual(len(bath), 1)

    def test_bad_grids(self) -> None:
        for grid in ([1.0], [0.0, 2.0, 1.0], [-1.0, 1.0], [0.0, 0.0, 1.0]):
            with self.assertRaises(DomainError):
                sample_bath_from_gamma(lambda w: 1.0, grid, gamma=1.0)

    def test_negative_kernel_rejected(self) -> None:
        with self.assertRaises(DomainError):
            sample_bath_from_gamma(lambda w: -1.0, [0.0, 1.0], gamma=1.0)

    def test_unknown_axes_preset(self) -> None:
        with self.assertRaises(DomainError):
            sample_bath_from_gamma(lambda w: 1.0, [0.0, 1.0], gamma=1.0, axes="cube")


class TestSerialization(unittest.TestCase):
    def test_file_round_trip(self) -> None:
        bath = two_mode_bath()
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "bath.json"
            bath.write(path)
            self.assertEqual(DiscreteBath.read(path), bath)

    def test_json_is_sorted(self) -> None:
        text = DiscreteBath.single(omega=1.0, beta=0.1).to_json()
        self.assertLess(text.index('"beta"'), text.index('"omega"'))
        self.assertTrue(text.endswith("\n"))

    def test_concatenation(self) -> None:
        bath = DiscreteBath.single(1.0, 0.1) + DiscreteBath.single(2.0, 0.2)
        self.assertEqual([o.omega for o in bath.oscillators], [1.0, 2.0])

    def test_invalid_oscillator(self) -> None:
        with self.assertRaises(ValueError):
            Oscillator(omega=0.0, beta=1.0)


if __name__ == "__main__":
    unittest.main()
