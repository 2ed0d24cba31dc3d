from unittest import TestCase
from unittest.mock import patch

from pydantic import ValidationError

from mimolab.constants import DEFAULT_M_GRID, DEFAULT_MASTER_SEED
from mimolab.settings import AnalysisSettings, LabSettingsModel, SimulationSettings, get_lab_settings, settings_from_env


class LabSettingsModelTestCase(TestCase):
    def test_default_settings_model(self):
        settings = LabSettingsModel()
        self.assertEqual(settings.master_seed, DEFAULT_MASTER_SEED)
        self.assertEqual(settings.m_grid, list(DEFAULT_M_GRID))
        self.assertIsInstance(settings.simulation, SimulationSettings)
        self.assertIsInstance(settings.analysis, AnalysisSettings)
        self.assertEqual(settings.analysis.dominance_threshold, 10.0)
        self.assertEqual(settings.analysis.condition_limit, 1e12)
        self.assertTrue(settings.output.plots)

    def test_grid_accepts_comma_string(self):
        settings = LabSettingsModel(m_grid='64, 128,256')
        self.assertEqual(settings.m_grid, [64, 128, 256])

    def test_grid_must_increase(self):
        with self.assertRaises(ValidationError) as ctx:
            LabSettingsModel(m_grid=[200, 100])
        self.assertIn('strictly increasing', str(ctx.exception))

    def test_threshold_must_exceed_one(self):
        with self.assertRaises(ValidationError) as ctx:
            AnalysisSettings(dominance_threshold=1)
        self.assertIn('greater than 1', str(ctx.exception))

    def test_trials_lower_bound(self):
        with self.assertRaises(ValidationError):
            SimulationSettings(n_trials=10)


class SettingsFromEnvTestCase(TestCase):
    def test_empty_environment(self):
        settings = settings_from_env({})
        self.assertEqual(settings, LabSettingsModel())

    def test_environment_overrides(self):
        settings = settings_from_env({'MIMO_LAB_SEED': '7', 'MIMO_LAB_GRID': '64,128', 'MIMO_LAB_TRIALS': '500', 'MIMO_LAB_WORKERS': '4'})
        self.assertEqual(settings.master_seed, 7)
        self.assertEqual(settings.m_grid, [64, 128])
        self.assertEqual(settings.simulation.n_trials, 500)
        self.assertEqual(settings.simulation.workers, 4)

    def test_blank_variables_are_ignored(self):
        settings = settings_from_env({'MIMO_LAB_SEED': ''})
        self.assertEqual(settings.master_seed, DEFAULT_MASTER_SEED)

    def test_invalid_environment(self):
        with self.assertRaises(RuntimeError) as ctx:
            settings_from_env({'MIMO_LAB_TRIALS': '10'})
        self.assertIn('Invalid lab configuration', str(ctx.exception))

    @patch('mimolab.settings.settings_from_env')
    def test_get_lab_settings(self, mock_from_env):
        mock_from_env.return_value = LabSettingsModel(master_seed=42)
        get_lab_settings.cache_clear()
        try:
            settings = get_lab_settings()
            self.assertEqual(settings.master_seed, 42)
            get_lab_settings()
            mock_from_env.assert_called_once()
        finally:
            get_lab_settings.cache_clear()
