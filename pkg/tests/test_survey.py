"""Tests for the design-space survey."""

import math
import unittest

from magnoise.config import INTERP_DB_MAX, INTERP_DB_MIN, INTERP_DB_MIN_LOSSY
from magnoise.kernel import SurveyGrid, preset_grid, survey_design_space


def one_point(t_over_d: float, lambda_over_d: float, phi: float = 0.0, **kwargs) -> SurveyGrid:
    return SurveyGrid(
        d_values=[1e-2],
        t_over_d=[t_over_d],
        lambda_over_d=[lambda_over_d],
        phi_values=[phi],
        **kwargs,
    )


class TestPresets(unittest.TestCase):
    def test_smoke_shape(self) -> None:
        grid = preset_grid("smoke")
        self.assertEqual(len(grid.points()), 18)

    def test_full_shape(self) -> None:
        grid = preset_grid("full", mode="two-slab")
        self.assertEqual(len(grid.points()), 4 * 13 * 13 * 5)
        self.assertEqual(grid.mode, "two-slab")

    def test_unknown_preset(self) -> None:
        with self.assertRaises(ValueError):
            preset_grid("everything")


class TestSurvey(unittest.TestCase):
    def test_single_point_records_both_values(self) -> None:
        report = survey_design_space(one_point(1.0, 1.0), workers=1)
        self.assertEqual(len(report.points), 1)
        point = report.points[0]
        self.assertIsNotNone(point.gamma_quad)
        self.assertIsNotNone(point.gamma_interp)
        self.assertAlmostEqual(
            point.err_db, 10 * math.log10(point.gamma_interp / point.gamma_quad)
        )
        self.assertEqual(report.argmax, 0)
        self.assertEqual(report.argmin, 0)

    def test_interpolation_stays_in_envelope(self) -> None:
        grid = SurveyGrid(
            d_values=[1e-2],
            t_over_d=[1e-2, 1.0, 1e2],
            lambda_over_d=[1e-2, 1.0, 1e2],
            phi_values=[0.0],
        )
        report = survey_design_space(grid, workers=1)
        self.assertEqual(report.failures, 0)
        self.assertLessEqual(report.max_db, 1.75)
        self.assertGreaterEqual(report.min_db, -0.5)

    def test_lossy_phase_transition_cells(self) -> None:
        grid = SurveyGrid(
            d_values=[1e-2],
            t_over_d=[10**-1.0, 10**-0.5, 1.0],
            lambda_over_d=[10**-0.5, 1.0, 10**0.5],
            phi_values=[math.pi / 8, math.pi / 4, 3 * math.pi / 8],
        )
        report = survey_design_space(grid, workers=1)
        self.assertEqual(report.failures, 0)
        self.assertLessEqual(report.max_db, INTERP_DB_MAX + 0.1)
        self.assertGreaterEqual(report.min_db, INTERP_DB_MIN_LOSSY - 0.1)

    def test_known_low_cell_is_flagged(self) -> None:
        report = survey_design_space(one_point(10**-0.5, 1.0, phi=math.pi / 8), workers=1)
        point = report.points[0]
        self.assertEqual(point.regime, "transition")
        self.assertLess(point.err_db, INTERP_DB_MIN)
        self.assertGreaterEqual(point.err_db, INTERP_DB_MIN_LOSSY - 0.1)
        self.assertEqual(report.outside_envelope, 1)
        self.assertTrue(any("envelope" in w for w in report.warnings))

    def test_zero_phase_cell_is_inside(self) -> None:
        report = survey_design_space(one_point(10**-0.5, 1.0), workers=1)
        self.assertGreaterEqual(report.points[0].err_db, INTERP_DB_MIN - 0.1)

    def test_two_slab_mode(self) -> None:
        report = survey_design_space(one_point(1.0, 1e-2, mode="two-slab"), workers=1)
        point = report.points[0]
        self.assertIsNotNone(point.gamma_two_slab)
        self.assertIsNone(point.gamma_interp)
        self.assertLessEqual(point.err_db, 1e-6)
        self.assertGreaterEqual(point.err_db, -0.6)

    def test_smoke_preset_runs_in_order(self) -> None:
        report = survey_design_space(preset_grid("smoke"), workers=1)
        self.assertEqual([p.index for p in report.points], list(range(18)))
        self.assertEqual(report.failures, 0)
        self.assertIsNotNone(report.max_db)

    def test_lossless_points_are_reported(self) -> None:
        report = survey_design_space(one_point(1.0, 1.0, phi=math.pi / 2), workers=1)
        self.assertIsNone(report.points[0].err_db)
        self.assertIsNone(report.max_db)
        self.assertTrue(any("lossless" in w for w in report.warnings))

    def test_worker_pool_keeps_grid_order(self) -> None:
        grid = SurveyGrid(
            d_values=[1e-2],
            t_over_d=[1.0],
            lambda_over_d=[1e-1, 1.0, 10.0],
            phi_values=[0.0],
        )
        serial = survey_design_space(grid, workers=1)
        pooled = survey_design_space(grid, workers=2)
        self.assertEqual(
            [p.model_dump() for p in serial.points], [p.model_dump() for p in pooled.points]
        )


if __name__ == "__main__":
    unittest.main()
