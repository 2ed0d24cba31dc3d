import json
import tempfile
from pathlib import Path
from unittest import TestCase
from unittest.mock import MagicMock, patch

import pandas as pd

from mimolab.choices import Precoder
from mimolab.constants import CSV_COLUMNS
from mimolab.exceptions import ConfigurationError
from mimolab.jobs.reproducepreset import ReproducePresetJob
from mimolab.models import SweepResult, SweepRow
from mimolab.scenarios import find_case, load_preset
from mimolab.settings import LabSettingsModel


def fake_sweep_job(**kwargs):
    case = kwargs['case']
    rows = [
        SweepRow(
            M=M,
            n_trials=kwargs['n_trials'],
            effective_sinr_simulated=2.0 * M**0.5,
            se_effective_sinr=0.01,
            effective_sinr_analytic=2.1 * M**0.5,
            ergodic_sum_rate=50.0,
            sum_rate_lower_bound=45.0,
            scv_sinr=3.0 / M,
        )
        for M in case.grid
    ]
    job = MagicMock()
    job.run.return_value = SweepResult(case_id=case.case_id, precoder=case.precoder, master_seed=kwargs['master_seed'], rows=rows)
    return job


class ReproducePresetJobTestCase(TestCase):
    def test_unknown_preset(self):
        with self.assertRaises(ConfigurationError):
            ReproducePresetJob(name='fig9')

    def test_case_selection(self):
        self.assertEqual([case.case_id for case in ReproducePresetJob(name='fig3').cases()], ['case1', 'case4', 'case5', 'case6'])
        self.assertEqual(len(ReproducePresetJob(name='fig4').cases()), 5)

    def test_precoder_override(self):
        self.assertTrue(all(case.precoder == Precoder.ZF for case in ReproducePresetJob(name='fig7').cases()))
        self.assertTrue(all(case.precoder == Precoder.MRT for case in ReproducePresetJob(name='table1').cases()))

    def test_grid_override(self):
        cases = ReproducePresetJob(name='fig4', grid=[100, 300]).cases()
        self.assertEqual(cases[0].grid, [100, 300])
        self.assertEqual(cases[0].L_p, [5, 4])

    @patch('mimolab.jobs.reproducepreset.CaseSweepJob', side_effect=fake_sweep_job)
    def test_writes_csv_and_summary(self, mock_job_class):
        with tempfile.TemporaryDirectory() as out_dir:
            written = ReproducePresetJob(name='fig1', out_dir=out_dir, master_seed=5, n_trials=100, plots=False).run()

            self.assertEqual([path.name for path in written], ['fig1.csv', 'fig1.json'])
            self.assertEqual(mock_job_class.call_count, 11)

            frame = pd.read_csv(Path(out_dir) / 'fig1.csv')
            self.assertEqual(tuple(frame.columns), CSV_COLUMNS)
            self.assertEqual(set(frame['metric']), {'effective_sinr_simulated', 'effective_sinr_analytic', 'reference_slope'})

            summary = json.loads((Path(out_dir) / 'fig1.json').read_text())
            self.assertEqual(summary['preset'], 'fig1')
            self.assertEqual(summary['master_seed'], 5)
            self.assertEqual(len(summary['cases']), 11)
            case6 = next(case for case in summary['cases'] if case['case_id'] == 'case6')
            self.assertAlmostEqual(case6['r_s_theoretical'], 1.0)
            self.assertAlmostEqual(case6['r_s_fitted'], 0.5)
            self.assertFalse(case6['deterministic'])
            self.assertEqual(len(case6['applicability']), 6)
            self.assertIn('applicable', case6['applicability'][0])

    @patch('mimolab.jobs.reproducepreset.CaseSweepJob', side_effect=fake_sweep_job)
    def test_scv_fit_and_plot(self, mock_job_class):
        with tempfile.TemporaryDirectory() as out_dir:
            written = ReproducePresetJob(name='fig3', out_dir=out_dir, master_seed=5, n_trials=100, plots=True).run()

            self.assertEqual([path.suffix for path in written], ['.csv', '.json', '.svg'])
            self.assertTrue((Path(out_dir) / 'fig3.svg').read_text().lstrip().startswith('<?xml'))

            summary = json.loads((Path(out_dir) / 'fig3.json').read_text())
            for case in summary['cases']:
                self.assertAlmostEqual(case['scv_fit']['a'], 3.0)
                self.assertAlmostEqual(case['scv_fit']['b'], 1.0)

            frame = pd.read_csv(Path(out_dir) / 'fig3.csv')
            self.assertIn('scv_fit', set(frame['metric']))

    def test_unwritable_directory(self):
        with tempfile.NamedTemporaryFile() as handle:
            with self.assertRaises(OSError):
                ReproducePresetJob(name='fig1', out_dir=Path(handle.name) / 'sub', plots=False).run()

    def test_applicability_uses_threshold(self):
        case4 = find_case(load_preset('table1'), '4').with_grid([200, 600])
        for threshold, expected in ((None, [False, True]), (9.0, [True, True]), (20.0, [False, False])):
            with self.subTest(threshold=threshold):
                verdicts = ReproducePresetJob(name='fig1', threshold=threshold).applicability(case4, case4.exponents())
                self.assertEqual([verdict['applicable'] for verdict in verdicts], expected)
                self.assertAlmostEqual(verdicts[0]['margin'], 9.37, delta=0.01)
                self.assertAlmostEqual(verdicts[1]['margin'], 16.23, delta=0.01)

    @patch('mimolab.jobs.reproducepreset.get_lab_settings')
    def test_threshold_from_settings(self, mock_settings):
        mock_settings.return_value = LabSettingsModel(analysis={'dominance_threshold': 20.0})
        self.assertEqual(ReproducePresetJob(name='fig1').threshold, 20.0)
        self.assertEqual(ReproducePresetJob(name='fig1', threshold=12.0).threshold, 12.0)
