"""Tests for the dissipation coefficient: quadrature, limits and interpolation."""

from __future__ import annotations

import math
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import zeta

from magnoise.core.errors import DomainError
from magnoise.core.model import MU0, Material, SlabSystem
from magnoise.kernel import (
    AsymptoticRegime,
    DissipationKernel,
    detect_regime,
    gamma_asymptotic,
    gamma_at,
    gamma_integral,
    gamma_interpolated,
    gamma_two_slab,
    transition_parameter,
)
from magnoise.kernel.integral import slab_profile_integrals, slab_wavenumber

COPPER = 5.9e7
CM = 1e-2


def conductor_with_skin_depth(lam: float, omega: float, phi: float = 0.0) -> Material:
    return Material.conductor(1.0 / (omega * MU0 * lam**2), phi=phi)


def quasi_static_limit(sigma: float, d: float, t: float) -> float:
    return MU0**2 * sigma * t / (64 * math.pi * d * (t + d))


class TestDissipationKernel(unittest.TestCase):
    def test_tensor_eigenvalues(self) -> None:
        kernel = DissipationKernel(
            gamma_scalar=3.0, omega=1.0, n_hat=(0.6, 0.0, 0.8), method="quadrature"
        )
        values = np.linalg.eigvalsh(kernel.tensor())
        np.testing.assert_allclose(values, [3.0, 3.0, 6.0], rtol=1e-12)

    def test_normal_component_is_twice_transverse(self) -> None:
        kernel = DissipationKernel(gamma_scalar=2.0, omega=1.0, method="quadrature")
        T = kernel.tensor()
        self.assertEqual(T[2, 2], 2 * T[0, 0])


class TestGammaIntegral(unittest.TestCase):
    def test_superconductor_is_lossless(self) -> None:
        slab = SlabSystem(d=1e-6, t=1e-6)
        kernel = gamma_integral(slab, Material.superconductor(100e-9), 1e9)
        self.assertEqual(kernel.gamma_scalar, 0.0)

    def test_nearly_superconducting_phase_goes_through_quadrature(self) -> None:
        slab = SlabSystem(d=1e-6, t=1e-6)
        omega = 1e9
        normal = gamma_integral(slab, Material.conductor(1e8), omega).gamma_scalar
        near = [Material.conductor(1e8, phi=math.pi / 2 - eps) for eps in (1e-6, 2e-6)]
        self.assertFalse(any(m.is_lossless for m in near))
        a, b = (gamma_integral(slab, m, omega).gamma_scalar for m in near)
        self.assertGreater(a, 0.0)
        self.assertLess(a / normal, 1e-5)
        # Re(sigma) = |sigma| sin(eps): Gamma vanishes linearly at the lossless phase
        self.assertAlmostEqual(b / a, 2.0, delta=1e-3)

    def test_quasi_static_copper(self) -> None:
        slab = SlabSystem(d=CM, t=CM)
        kernel = gamma_at(slab, Material.conductor(COPPER), 0.0)
        expected = quasi_static_limit(COPPER, CM, CM)
        self.assertAlmostEqual(expected, 2.32e-5, delta=0.01e-5)
        self.assertAlmostEqual(kernel.gamma_scalar / expected, 1.0, delta=0.02)

    def test_thin_skin_limit(self) -> None:
        lam = 1e-3 * CM
        omega = 1.0 / (MU0 * COPPER * lam**2)
        slab = SlabSystem(d=CM, t=CM)
        kernel = gamma_integral(slab, Material.conductor(COPPER), omega)
        expected = 3 * MU0**2 * COPPER * lam**3 / (64 * math.pi * CM**4 * math.cos(math.pi / 4))
        self.assertAlmostEqual(kernel.gamma_scalar / expected, 1.0, delta=0.02)

    def test_rejects_non_positive_omega(self) -> None:
        slab = SlabSystem(d=CM, t=CM)
        with self.assertRaises(DomainError):
            gamma_integral(slab, Material.conductor(COPPER), 0.0)
        with self.assertRaises(DomainError):
            gamma_integral(slab, Material.conductor(COPPER), -1.0)

    def test_rejects_two_slab_geometry(self) -> None:
        slab = SlabSystem(d=CM, t=CM, config="two-slab")
        with self.assertRaises(DomainError):
            gamma_integral(slab, Material.conductor(COPPER), 1.0)

    def test_lossy_permeability_warns(self) -> None:
        slab = SlabSystem(d=CM, t=CM)
        kernel = gamma_integral(slab, Material.conductor(0.0, K=1.0 + 0.5j), 1e3)
        self.assertGreater(kernel.gamma_scalar, 0.0)
        self.assertTrue(any("Im(K)" in w for w in kernel.warnings))

    def test_sigma_doubles_gamma_in_quasi_static_regime(self) -> None:
        slab = SlabSystem(d=CM, t=CM)
        a = gamma_integral(slab, Material.conductor(1e3), 1e-3).gamma_scalar
        b = gamma_integral(slab, Material.conductor(2e3), 1e-3).gamma_scalar
        self.assertAlmostEqual(b / a, 2.0, places=6)

    @settings(max_examples=15, deadline=None)
    @given(
        st.floats(min_value=-4, max_value=-1),
        st.floats(min_value=-2, max_value=2),
        st.floats(min_value=-2, max_value=2),
        st.floats(min_value=0.0, max_value=math.pi / 2),
    )
    def test_positive_for_passive_materials(
        self, log_d: float, log_t_over_d: float, log_lam_over_d: float, phi: float
    ) -> None:
        d = 10**log_d
        slab = SlabSystem(d=d, t=d * 10**log_t_over_d)
        omega = 2 * math.pi * 1e3
        material = conductor_with_skin_depth(d * 10**log_lam_over_d, omega, phi)
        self.assertGreaterEqual(gamma_integral(slab, material, omega).gamma_scalar, 0.0)


class TestIntegrandSafety(unittest.TestCase):
    @settings(max_examples=50, deadline=None)
    @given(
        st.floats(min_value=1e-3, max_value=1e6),
        st.floats(min_value=1e-3, max_value=1e12),
        st.floats(min_value=0.0, max_value=1e10),
    )
    def test_decaying_branch(self, rho: float, omega: float, sigma: float) -> None:
        k = slab_wavenumber(rho, omega, MU0, complex(sigma, -0.3 * sigma))
        self.assertGreaterEqual(k.real, 0.0)

    def test_finite_for_huge_rho_t(self) -> None:
        t = 1e-3
        for rho_t in (1.0, 1e2, 1e4):
            i_psi, i_dpsi = slab_profile_integrals(rho_t / t, 1e6, MU0, complex(1e7, 0.0), t)
            self.assertTrue(math.isfinite(i_psi))
            self.assertTrue(math.isfinite(i_dpsi))
            self.assertGreaterEqual(i_psi, 0.0)


class TestTwoSlab(unittest.TestCase):
    def test_mirror_never_exceeds_twice_one_slab(self) -> None:
        omega = 2 * math.pi * 1e3
        for t_over_d, lam_over_d in ((1.0, 1e-2), (1e-2, 1.0), (1.0, 1e2), (1e2, 1e-1)):
            d = 1e-3
            material = conductor_with_skin_depth(lam_over_d * d, omega)
            one = gamma_integral(SlabSystem(d=d, t=t_over_d * d), material, omega)
            two = gamma_two_slab(
                SlabSystem(d=d, t=t_over_d * d, config="two-slab"), material, omega
            )
            ratio_db = 10 * math.log10(two.gamma_scalar / (2 * one.gamma_scalar))
            self.assertLessEqual(ratio_db, 1e-6)
            self.assertGreaterEqual(ratio_db, -0.6)

    def _ratio(self, d: float, t: float, material: Material, omega: float) -> float:
        one = gamma_integral(SlabSystem(d=d, t=t), material, omega).gamma_scalar
        two = gamma_two_slab(SlabSystem(d=d, t=t, config="two-slab"), material, omega)
        return two.gamma_scalar / one

    def test_ratio_tends_to_two_as_skin_depth_outgrows_distance(self) -> None:
        omega = 2 * math.pi * 1e3
        material = conductor_with_skin_depth(1e-3, omega)
        gaps = [abs(self._ratio(d, 1e-3, material, omega) - 2.0) for d in (1e-4, 1e-5, 1e-6)]
        self.assertEqual(gaps, sorted(gaps, reverse=True))
        self.assertLess(gaps[-1], 1e-2)

    def test_ratio_settles_at_mirror_limit_far_from_thick_slab(self) -> None:
        # lambda << d << t: each image is weighted by (1 + exp(-2 rho d))^-2
        omega = 2 * math.pi * 1e3
        material = conductor_with_skin_depth(1e-3, omega)
        ratio = self._ratio(1.0, 10.0, material, omega)
        self.assertAlmostEqual(ratio / (1.5 * zeta(3)), 1.0, delta=5e-3)
        self.assertGreaterEqual(10 * math.log10(ratio / 2), -0.6)

    def test_requires_two_slab_geometry(self) -> None:
        with self.assertRaises(DomainError):
            gamma_two_slab(SlabSystem(d=CM, t=CM), Material.conductor(COPPER), 1.0)

    def test_gamma_at_dispatches_on_geometry(self) -> None:
        slab = SlabSystem(d=CM, t=CM, config="two-slab")
        kernel = gamma_at(slab, Material.conductor(COPPER), 2 * math.pi * 100)
        self.assertEqual(kernel.method, "two-slab-quadrature")


class TestAsymptotic(unittest.TestCase):
    def test_quasi_static_closed_form(self) -> None:
        slab = SlabSystem(d=CM, t=CM)
        kernel = gamma_asymptotic(slab, Material.conductor(COPPER), 0.0)
        self.assertEqual(kernel.regime, "quasi-static")
        self.assertAlmostEqual(
            kernel.gamma_scalar / quasi_static_limit(COPPER, CM, CM), 1.0, places=12
        )

    def test_regime_detection(self) -> None:
        omega = 1e3
        cases = [
            ((1.0, 1.0), 1e2, AsymptoticRegime.QUASI_STATIC),
            ((1.0, 1.0), 1e-3, AsymptoticRegime.THIN_SKIN),
            ((1.0, 1e-8), 1e-6, AsymptoticRegime.THIN_SLAB),
            ((1.0, 1.0), 0.5, None),
        ]
        for (d, t), lam, expected in cases:
            material = conductor_with_skin_depth(lam, omega)
            self.assertIs(detect_regime(SlabSystem(d=d, t=t), material, omega), expected)

    def test_transition_region_needs_explicit_regime(self) -> None:
        omega = 1e3
        material = conductor_with_skin_depth(0.5, omega)
        slab = SlabSystem(d=1.0, t=1.0)
        with self.assertRaises(DomainError):
            gamma_asymptotic(slab, material, omega)
        forced = gamma_asymptotic(slab, material, omega, AsymptoticRegime.THIN_SKIN)
        self.assertTrue(forced.warnings)

    def test_requires_unit_permeability(self) -> None:
        slab = SlabSystem(d=CM, t=CM)
        with self.assertRaises(DomainError):
            gamma_asymptotic(slab, Material.conductor(COPPER, K=2.0), 0.0)

    def test_two_slab_doubles_with_note(self) -> None:
        material = Material.conductor(COPPER)
        one = gamma_asymptotic(SlabSystem(d=CM, t=CM), material, 0.0)
        two = gamma_asymptotic(SlabSystem(d=CM, t=CM, config="two-slab"), material, 0.0)
        self.assertEqual(two.gamma_scalar, 2 * one.gamma_scalar)
        self.assertTrue(two.warnings)


class TestInterpolation(unittest.TestCase):
    def test_static_copper_equals_quasi_static_limit(self) -> None:
        slab = SlabSystem(d=CM, t=CM)
        interp = gamma_interpolated(slab, Material.conductor(COPPER), 0.0)
        asym = gamma_asymptotic(slab, Material.conductor(COPPER), 0.0)
        self.assertAlmostEqual(interp.gamma_scalar / asym.gamma_scalar, 1.0, places=3)

    def test_large_skin_depth_approaches_quasi_static(self) -> None:
        omega = 1e3
        slab = SlabSystem(d=1.0, t=1.0)
        material = conductor_with_skin_depth(1e4, omega)
        ratio = (
            gamma_interpolated(slab, material, omega).gamma_scalar
            / quasi_static_limit(material.sigma_mag, 1.0, 1.0)
        )
        self.assertAlmostEqual(ratio, 1.0, delta=1e-3)

    def test_matches_each_limit_deep_in_its_regime(self) -> None:
        omega = 1e3
        cases = [
            ((1.0, 1.0), 1e-3, AsymptoticRegime.THIN_SKIN),
            ((1.0, 1e-8), 1e-6, AsymptoticRegime.THIN_SLAB),
        ]
        for (d, t), lam, regime in cases:
            slab = SlabSystem(d=d, t=t)
            material = conductor_with_skin_depth(lam, omega)
            interp = gamma_interpolated(slab, material, omega).gamma_scalar
            limit = gamma_asymptotic(slab, material, omega, regime).gamma_scalar
            self.assertAlmostEqual(interp / limit, 1.0, delta=0.01, msg=regime.value)

    def test_transition_parameter(self) -> None:
        value = transition_parameter(1.0, 2.0, 0.5, 0.0)
        self.assertAlmostEqual(value, 2.0 / (2 * 0.5 * math.cos(math.pi / 4)))

    def test_lossy_phase_in_transition_warns(self) -> None:
        omega = 1e3
        slab = SlabSystem(d=1.0, t=10**-0.5)
        lossy = gamma_interpolated(slab, conductor_with_skin_depth(1.0, omega, math.pi / 8), omega)
        plain = gamma_interpolated(slab, conductor_with_skin_depth(1.0, omega), omega)
        self.assertEqual(lossy.regime, "transition")
        self.assertTrue(any("dB low" in w for w in lossy.warnings))
        self.assertEqual(plain.warnings, [])

    def test_permeability_warning(self) -> None:
        slab = SlabSystem(d=CM, t=CM)
        kernel = gamma_interpolated(slab, Material.conductor(COPPER, K=3.0), 1e3)
        self.assertTrue(any("K" in w for w in kernel.warnings))


if __name__ == "__main__":
    unittest.main()
