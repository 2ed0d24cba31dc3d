from unittest import TestCase
from unittest.mock import patch

from mimolab.choices import Precoder
from mimolab.models import NetworkConfig, ScalingExponents
from mimolab.utils.precoding import MrtAnalysis, PrecoderAnalysisBase, ZfAnalysis, get_analysis_class, run_precoder_operation


class AnalysisWithoutPrecoder(PrecoderAnalysisBase):
    pass


class AnalysisWithoutHooks(PrecoderAnalysisBase):
    precoder = Precoder.MRT


class GetAnalysisClassTestCase(TestCase):
    def test_lookup(self):
        self.assertIs(get_analysis_class('mrt'), MrtAnalysis)
        self.assertIs(get_analysis_class(Precoder.ZF), ZfAnalysis)

    def test_unknown_precoder(self):
        with self.assertRaises(ValueError) as ctx:
            get_analysis_class('rzf')
        self.assertIn("Unknown precoder 'rzf'", str(ctx.exception))


class PrecoderAnalysisBaseTestCase(TestCase):
    def setUp(self):
        self.cfg = NetworkConfig(M=100, K=10, E_t=10, rho=10)

    def test_requires_precoder(self):
        with self.assertRaises(ValueError):
            AnalysisWithoutPrecoder(self.cfg)

    def test_hooks_not_implemented(self):
        analysis = AnalysisWithoutHooks(self.cfg)
        for hook in (analysis.effective_sinr, analysis.applicability):
            with self.assertRaises(NotImplementedError):
                hook()
        with self.assertRaises(NotImplementedError):
            analysis.trial_terms(None)

    def test_context(self):
        s = ScalingExponents(r_rho=0.5)
        analysis = MrtAnalysis(self.cfg, exponents=s, threshold=5)
        self.assertEqual(analysis.exponents, s)
        self.assertEqual(analysis.threshold, 5)
        self.assertEqual(MrtAnalysis(self.cfg).threshold, 10.0)

    def test_summaries(self):
        mrt = MrtAnalysis(self.cfg).summary()
        self.assertEqual(mrt['precoder'], 'mrt')
        self.assertAlmostEqual(mrt['effective_sinr'], 5.862, places=3)
        self.assertAlmostEqual(mrt['sum_rate_lower_bound'], 70 * mrt['rate_lower_bound'])
        self.assertIn('p_s_mean', mrt['moments'])

        zf = ZfAnalysis(self.cfg).summary()
        self.assertAlmostEqual(zf['effective_sinr'], 40.45, places=2)
        self.assertAlmostEqual(zf['quantities']['lambda_'], 7.8616, places=4)


class RunPrecoderOperationTestCase(TestCase):
    def setUp(self):
        self.cfg = NetworkConfig(M=100, K=10, E_t=10, rho=10)

    def test_dispatch(self):
        self.assertAlmostEqual(run_precoder_operation(MrtAnalysis, self.cfg, 'effective_sinr'), 5.862, places=3)
        self.assertAlmostEqual(run_precoder_operation(ZfAnalysis, self.cfg, 'rate_lower_bound'), 5.3734, places=3)

    def test_extra_args_reach_instance(self):
        verdict = run_precoder_operation(MrtAnalysis, self.cfg, 'applicability', {'exponents': ScalingExponents(), 'threshold': 1.5})
        self.assertEqual(verdict.threshold, 1.5)

    def test_unknown_operation(self):
        with self.assertRaises(NotImplementedError) as ctx:
            run_precoder_operation(MrtAnalysis, self.cfg, 'nonexistent')
        self.assertIn('MrtAnalysis does not implement `nonexistent()`.', str(ctx.exception))

    @patch('mimolab.utils.precoding.mrtanalysis.effective_sinr_mrt')
    def test_errors_propagate(self, mock_sinr):
        mock_sinr.side_effect = ArithmeticError('boom')
        with self.assertRaises(ArithmeticError):
            run_precoder_operation(MrtAnalysis, self.cfg, 'effective_sinr')
