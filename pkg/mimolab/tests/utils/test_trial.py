from unittest import TestCase
from unittest.mock import patch

import numpy as np

from mimolab.choices import Precoder
from mimolab.exceptions import SingularGramError
from mimolab.models import NetworkConfig, SeedPath, SinrBreakdown, ZfRealizedTerms
from mimolab.settings import LabSettingsModel
from mimolab.utils.rng import case_key, trial_generator
from mimolab.utils.trial import draw_cluster, realized_zf_terms, run_trial
from mimolab.utils.zf import zf_lambda


class TrialGeneratorTestCase(TestCase):
    def test_same_path_same_stream(self):
        first = trial_generator(SeedPath(1, 'case1', 100, 5)).standard_normal(4)
        second = trial_generator(SeedPath(1, 'case1', 100, 5)).standard_normal(4)
        np.testing.assert_array_equal(first, second)

    def test_every_path_component_matters(self):
        reference = trial_generator(SeedPath(1, 'case1', 100, 5)).standard_normal(4)
        for path in (SeedPath(2, 'case1', 100, 5), SeedPath(1, 'case2', 100, 5), SeedPath(1, 'case1', 200, 5), SeedPath(1, 'case1', 100, 6)):
            with self.subTest(path=path):
                self.assertFalse(np.array_equal(reference, trial_generator(path).standard_normal(4)))

    def test_case_key_is_stable(self):
        self.assertEqual(case_key('case1'), case_key('case1'))
        self.assertNotEqual(case_key('case1'), case_key('case11'))


class DrawClusterTestCase(TestCase):
    def setUp(self):
        self.cfg = NetworkConfig(M=32, K=3, c=0.5, E_t=10, rho=10, L_p=2)
        self.cluster = draw_cluster(self.cfg, trial_generator(SeedPath(1, 'cluster', 32, 0)))

    def test_shapes(self):
        self.assertEqual(self.cluster.channels.shape, (3, 3, 3, 16))
        self.assertEqual(self.cluster.estimates.shape, (3, 3, 16))
        self.assertEqual(self.cluster.observations.shape, (3, 3, 16))

    def test_contaminated_estimate_is_scaled(self):
        for station in range(3):
            for cell in range(3):
                factor = 1.0 if station == cell else self.cfg.alpha
                np.testing.assert_allclose(self.cluster.estimate(station, cell, 1, self.cfg), factor * self.cluster.estimates[station, 1], atol=1e-12)

    def test_error_is_channel_minus_estimate(self):
        error = self.cluster.error(1, 0, 2, self.cfg)
        np.testing.assert_allclose(error + self.cluster.estimate(1, 0, 2, self.cfg), self.cluster.channels[1, 0, 2])


class RealizedZfTermsTestCase(TestCase):
    def test_signal_is_deterministic(self):
        cfg = NetworkConfig(M=64, K=4, c=0.5, E_t=10, rho=10, L_p=1)
        cluster = draw_cluster(cfg, trial_generator(SeedPath(1, 'zf', 64, 0)))
        terms = realized_zf_terms(cluster, cfg)
        self.assertAlmostEqual(terms.signal, cfg.rho * zf_lambda(cfg))
        self.assertAlmostEqual(terms.pilot_interference, terms.signal * 0.09)
        self.assertGreater(terms.error_power, 0)
        self.assertAlmostEqual(terms.sinr, terms.signal / (1 + terms.pilot_interference + terms.error_power))

    @patch('mimolab.utils.zf.get_lab_settings')
    def test_condition_limit_from_settings(self, mock_settings):
        mock_settings.return_value = LabSettingsModel(analysis={'condition_limit': 1.000001})
        cfg = NetworkConfig(M=64, K=4, c=0.5, E_t=10, rho=10, L_p=1)
        cluster = draw_cluster(cfg, trial_generator(SeedPath(1, 'zf', 64, 0)))
        with self.assertRaises(SingularGramError):
            realized_zf_terms(cluster, cfg)


class RunTrialTestCase(TestCase):
    def setUp(self):
        self.cfg = NetworkConfig(M=32, K=4, c=0.5, E_t=10, rho=10, L_p=1)

    def test_reproducible(self):
        first = run_trial(self.cfg, Precoder.MRT, SeedPath(9, 'case1', 32, 3))
        second = run_trial(self.cfg, Precoder.MRT, SeedPath(9, 'case1', 32, 3))
        self.assertEqual(first.sinr, second.sinr)
        self.assertEqual(first.trial_index, 3)

    def test_trials_differ(self):
        first = run_trial(self.cfg, Precoder.MRT, SeedPath(9, 'case1', 32, 3))
        second = run_trial(self.cfg, Precoder.MRT, SeedPath(9, 'case1', 32, 4))
        self.assertNotEqual(first.sinr, second.sinr)

    def test_precoder_components(self):
        mrt = run_trial(self.cfg, Precoder.MRT, (9, 'case1', 32, 0))
        zf = run_trial(self.cfg, 'zf', (9, 'case1', 32, 0))
        self.assertIsInstance(mrt.components, SinrBreakdown)
        self.assertIsInstance(zf.components, ZfRealizedTerms)
        self.assertAlmostEqual(mrt.rate, np.log2(1 + mrt.sinr))

    def test_single_user_without_contamination(self):
        cfg = NetworkConfig(M=32, K=1, c=0.5, E_t=10, rho=10)
        result = run_trial(cfg, Precoder.MRT, SeedPath(9, 'single', 32, 0))
        self.assertEqual(result.components.P_i_in, 0.0)
        self.assertEqual(result.components.P_i_out, 0.0)
