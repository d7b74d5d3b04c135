"""Tests for the Kramers-Kronig principal-value transform."""

import unittest

import numpy as np

from magnoise.core.errors import DomainError, ResolutionError
from magnoise.quantum import kramers_kronig

GRID = np.linspace(-200.0, 200.0, 40001)
LORENTZIAN = 1.0 / (1.0 + GRID**2)


class TestKramersKronig(unittest.TestCase):
    def test_lorentzian(self) -> None:
        for omega in (0.5, 1.0, 3.0):
            expected = omega / (1 + omega**2)
            self.assertAlmostEqual(kramers_kronig(GRID, LORENTZIAN, omega), expected, delta=1e-4)

    def test_even_input_gives_odd_output(self) -> None:
        plus = kramers_kronig(GRID, LORENTZIAN, 0.7)
        minus = kramers_kronig(GRID, LORENTZIAN, -0.7)
        self.assertAlmostEqual(plus, -minus, places=8)

    def test_zero_input(self) -> None:
        self.assertEqual(kramers_kronig(GRID, np.zeros_like(GRID), 1.0), 0.0)

    def test_coarse_grid_rejected(self) -> None:
        grid = np.linspace(-200.0, 200.0, 41)
        with self.assertRaises(ResolutionError) as ctx:
            kramers_kronig(grid, 1.0 / (1.0 + grid**2), 1.0)
        self.assertIn("too coarse", str(ctx.exception))

    def test_omega_outside_grid(self) -> None:
        for omega in (-200.0, 250.0):
            with self.assertRaises(DomainError):
                kramers_kronig(GRID, LORENTZIAN, omega)

    def test_malformed_samples(self) -> None:
        with self.assertRaises(DomainError):
            kramers_kronig([0.0, 1.0, 2.0], [1.0, 1.0, 1.0], 1.0)
        with self.assertRaises(DomainError):
            kramers_kronig([0.0, 2.0, 1.0, 3.0, 4.0], [1.0] * 5, 1.5)
        with self.assertRaises(DomainError):
            kramers_kronig(GRID, LORENTZIAN[:-1], 1.0)


if __name__ == "__main__":
    unittest.main()
