"""Scenario reproductions: atom trap, MRFM tip, donor qubit under a gate."""

from __future__ import annotations

import math
import unittest

from magnoise.core.errors import ConfigError
from magnoise.report import (
    SCENARIO_DEFAULTS,
    parse_config_text,
    render_config,
    resolve_parameters,
    scenario_atom_trap,
    scenario_kane,
    scenario_mrfm,
    tip_field,
)

# narrow sweeps keep the quadrature count small
MRFM_FAST = {"sweep_points": "3", "sigma_min": "1e5", "sigma_max": "1e7"}
KANE_FAST = {"sweep_points": "2", "sigma_min": "1e6", "sigma_max": "1e7"}


class TestAtomTrap(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        cls.report = scenario_atom_trap()

    def test_low_frequency_noise(self) -> None:
        b0 = self.report.output("B_noise_0")
        self.assertAlmostEqual(b0 / 1.2e-12, 1.0, delta=0.05)

    def test_noise_at_second_frequency(self) -> None:
        bf = self.report.output("B_noise_f")
        self.assertGreater(bf, 0.5e-12)
        self.assertLess(bf, 0.7e-12)
        self.assertLess(bf, self.report.output("B_noise_0"))

    def test_edm_noise(self) -> None:
        energy = self.report.output("edm_energy_noise")
        self.assertAlmostEqual(energy / 1.946e-20, 1.0, delta=0.01)
        # 1e6 V/m = 1e4 V/cm
        self.assertAlmostEqual(self.report.output("edm_noise") / (energy / 1e4), 1.0, places=9)

    def test_provenance_ratios(self) -> None:
        names = [p.name for p in self.report.provenance]
        self.assertEqual(names, ["B_noise_0", "B_noise_f", "edm_energy_noise"])
        for p in self.report.provenance:
            self.assertAlmostEqual(p.ratio, p.computed_value / p.quoted_value)
            self.assertAlmostEqual(p.ratio, 1.0, delta=0.05)

    def test_inputs_echo_declared_units(self) -> None:
        self.assertEqual(self.report.inputs["separation"], "2cm")
        self.assertEqual(self.report.inputs["electric_field"], "10000V/cm")
        self.assertEqual(self.report.inputs["temperature"], "300K")

    def test_averaging_regions(self) -> None:
        report = scenario_atom_trap(overrides={"n_regions": "4"})
        self.assertAlmostEqual(
            report.output("B_noise_0_averaged"), self.report.output("B_noise_0") / 2.0
        )
        self.assertAlmostEqual(
            report.output("edm_energy_noise") / self.report.output("edm_energy_noise"), 0.5
        )
        self.assertNotIn("edm_energy_noise", [p.name for p in report.provenance])

    def test_deterministic_json(self) -> None:
        self.assertEqual(scenario_atom_trap().to_json(), self.report.to_json())

    def test_config_round_trip(self) -> None:
        text = render_config(SCENARIO_DEFAULTS["atom-trap"], title="atom-trap defaults")
        report = scenario_atom_trap(file_entries=parse_config_text(text))
        self.assertEqual(report.inputs_sha256, self.report.inputs_sha256)
        self.assertEqual(report.output("B_noise_0"), self.report.output("B_noise_0"))

    def test_override_changes_fingerprint(self) -> None:
        report = scenario_atom_trap(overrides={"separation": "4cm"})
        self.assertNotEqual(report.inputs_sha256, self.report.inputs_sha256)
        self.assertAlmostEqual(report.output("d"), 0.02)

    def test_outputs_csv_has_quoted_column(self) -> None:
        header, *rows = self.report.outputs_csv().splitlines()
        self.assertEqual(header, "name,value,unit,quoted_value,ratio")
        self.assertTrue(any(r.startswith("B_noise_0,") for r in rows))

    def test_bad_parameters(self) -> None:
        with self.assertRaises(ConfigError):
            scenario_atom_trap(overrides={"n_regions": "0"})
        with self.assertRaises(ConfigError):
            scenario_atom_trap(overrides={"electric_field": "0"})
        with self.assertRaises(ConfigError):
            scenario_atom_trap(overrides={"plates": "2"})

    def test_missing_output_name(self) -> None:
        with self.assertRaises(KeyError):
            self.report.output("nonexistent")


class TestMrfm(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        cls.report = scenario_mrfm(overrides=MRFM_FAST)

    def test_tip_field(self) -> None:
        self.assertAlmostEqual(tip_field(1e-6, 1.0, 0.0), 2.0 / 3.0)
        self.assertAlmostEqual(tip_field(1e-6, 1.0, 5e-8), 2.0 / (3.0 * 1.05**3))
        self.assertAlmostEqual(self.report.output("B0"), 0.5759, places=4)

    def test_electron_frequency(self) -> None:
        self.assertAlmostEqual(self.report.output("f0_electron") / 16.12e9, 1.0, delta=1e-3)

    def test_electron_rate(self) -> None:
        rate1 = self.report.output("electron_rate1")
        self.assertAlmostEqual(rate1 / 1.08, 1.0, delta=0.05)
        self.assertGreater(rate1, self.report.output("proton_rate1"))

    def test_sweep_table(self) -> None:
        self.assertEqual(len(self.report.sweep), 3)
        sigmas = [row["sigma_S_per_m"] for row in self.report.sweep]
        self.assertAlmostEqual(sigmas[0], 1e5)
        self.assertAlmostEqual(sigmas[-1], 1e7)
        header = self.report.sweep_csv().splitlines()[0]
        self.assertTrue(header.startswith("sigma_S_per_m,skin_depth_electron_m"))

    def test_sweep_validation(self) -> None:
        with self.assertRaises(ConfigError):
            scenario_mrfm(overrides={**MRFM_FAST, "sweep_points": "1.5"})
        with self.assertRaises(ConfigError):
            scenario_mrfm(overrides={**MRFM_FAST, "sigma_min": "1e8"})


class TestMrfmPeak(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        # one point per decade across the skin-depth crossover
        cls.report = scenario_mrfm(
            overrides={"sweep_points": "6", "sigma_min": "1e8", "sigma_max": "1e13"}
        )

    def test_single_interior_maximum(self) -> None:
        rates = [row["electron_rate1_per_s"] for row in self.report.sweep]
        self.assertTrue(all(r is not None and r > 0 for r in rates))
        top = rates.index(max(rates))
        self.assertTrue(0 < top < len(rates) - 1)
        self.assertEqual(rates[: top + 1], sorted(rates[: top + 1]))
        self.assertEqual(rates[top:], sorted(rates[top:], reverse=True))
        self.assertFalse(any("local maximum" in w for w in self.report.warnings))

    def test_peak_sits_near_skin_depth_crossover(self) -> None:
        peak = self.report.output("sweep_peak_sigma")
        self.assertGreaterEqual(peak, 1e9)
        self.assertLessEqual(peak, 1e12)


class TestKane(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        cls.report = scenario_kane(overrides=KANE_FAST)

    def test_amplification(self) -> None:
        expected = (1.0 + 58.0 / 34.5) ** 2
        self.assertAlmostEqual(self.report.output("amplification"), expected, places=9)
        self.assertAlmostEqual(expected, 7.189, places=3)

    def test_nuclear_rate_scaled_by_gain(self) -> None:
        ratio = self.report.output("nuclear_rate1") / self.report.output("bare_nuclear_rate1")
        self.assertAlmostEqual(ratio, self.report.output("amplification"), places=6)

    def test_electron_faster_than_nucleus(self) -> None:
        self.assertGreater(self.report.output("electron_over_nuclear_rate1"), 1.0)

    def test_no_hyperfine(self) -> None:
        report = scenario_kane(overrides={**KANE_FAST, "hyperfine": "0"})
        self.assertEqual(report.output("amplification"), 1.0)

    def test_sweep_rows(self) -> None:
        self.assertEqual(len(self.report.sweep), 2)
        for row in self.report.sweep:
            self.assertTrue(math.isfinite(row["nuclear_rate1_per_s"]))


class TestDefaults(unittest.TestCase):
    def test_every_default_table_round_trips(self) -> None:
        for name, defaults in SCENARIO_DEFAULTS.items():
            with self.subTest(name=name):
                text = render_config(defaults, title=name)
                again = resolve_parameters(defaults, parse_config_text(text))
                for key, param in defaults.items():
                    self.assertEqual(again[key].value, param.value)


if __name__ == "__main__":
    unittest.main()
