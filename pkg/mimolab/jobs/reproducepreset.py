import logging
import math
from pathlib import Path

from mimolab.choices import Metric
from mimolab.constants import FIGURE_PRESETS
from mimolab.exceptions import ConfigurationError, DomainError, MimoLabError
from mimolab.output import records_to_frame, scv_fit_records, sweep_records, write_metric_csv, write_summary
from mimolab.scenarios import load_preset
from mimolab.settings import get_lab_settings
from mimolab.utils.precoding import get_analysis_class
from mimolab.utils.scaling import deterministic_check, scaling_exponent
from mimolab.utils.statistics import estimate_exponent, fit_power_decay

from .casesweep import CaseSweepJob

logger = logging.getLogger(__name__)

__all__ = ('ReproducePresetJob',)


class ReproducePresetJob:
    def __init__(self, **kwargs):
        settings = get_lab_settings()
        self.name = kwargs.get('name')
        if self.name not in FIGURE_PRESETS:
            raise ConfigurationError(f'unknown preset {self.name!r}, expected one of {", ".join(FIGURE_PRESETS)}')
        self.preset = FIGURE_PRESETS[self.name]
        self.out_dir = Path(kwargs.get('out_dir', '.'))
        self.master_seed = settings.master_seed if kwargs.get('master_seed') is None else kwargs['master_seed']
        self.n_trials = kwargs.get('n_trials') or settings.simulation.n_trials
        self.workers = kwargs.get('workers') or settings.simulation.workers
        self.grid = kwargs.get('grid')
        self.plots = kwargs.get('plots', settings.output.plots)
        self.float_format = settings.output.float_format
        self.threshold = kwargs.get('threshold') or settings.analysis.dominance_threshold

    def cases(self):
        cases = load_preset(self.preset['table'])
        if self.preset['cases']:
            cases = [case for case in cases if case.case_id in self.preset['cases']]
        if self.preset['precoder'] is not None:
            cases = [case.model_copy(update={'precoder': self.preset['precoder']}) for case in cases]
        if self.grid:
            cases = [case.with_grid(self.grid) for case in cases]
        return cases

    def run(self):
        try:
            self.out_dir.mkdir(parents=True, exist_ok=True)
        except OSError as err:
            raise OSError(f'output directory {self.out_dir} is not writable: {err}') from err

        records, summaries = [], []
        for case in self.cases():
            sweep = CaseSweepJob(case=case, n_trials=self.n_trials, master_seed=self.master_seed, workers=self.workers).run()
            exponents = case.exponents()
            r_s = scaling_exponent(exponents)

            records += sweep_records(sweep, self.preset['metrics'], reference_exponent=r_s)
            summary = {
                'case_id': case.case_id,
                'precoder': case.precoder.value,
                'r_s_theoretical': r_s,
                'r_s_fitted': self.fitted_exponent(sweep),
                'applicability': self.applicability(case, exponents),
                'deterministic': deterministic_check(exponents),
            }
            if Metric.SCV_FIT in self.preset['metrics']:
                fit = self.scv_fit(sweep)
                if fit is not None:
                    summary['scv_fit'] = {'a': fit[0], 'b': fit[1]}
                    records += scv_fit_records(case.case_id, [row.M for row in sweep.rows], *fit)
            summaries.append(summary)

        written = [write_metric_csv(records, self.out_dir / f'{self.name}.csv', self.float_format)]
        written.append(write_summary({'preset': self.name, 'master_seed': self.master_seed, 'n_trials': self.n_trials, 'cases': summaries}, self.out_dir / f'{self.name}.json'))
        if self.plots:
            from mimolab.output.plots import plot_preset

            written.append(plot_preset(records_to_frame(records), self.preset, self.out_dir / f'{self.name}.svg'))
        logger.info('Preset %s written to %s', self.name, self.out_dir)
        return written

    def fitted_exponent(self, sweep):
        try:
            return estimate_exponent(sweep.points('effective_sinr_simulated'))
        except DomainError as err:
            logger.warning('No exponent fit for case %s: %s', sweep.case_id, err)
            return math.nan

    def scv_fit(self, sweep):
        try:
            return fit_power_decay(sweep.points('scv_sinr'))
        except DomainError as err:
            logger.warning('No SCV fit for case %s: %s', sweep.case_id, err)
            return None

    def applicability(self, case, exponents):
        verdicts = []
        analysis_class = get_analysis_class(case.precoder)
        for M in case.grid:
            try:
                verdict = analysis_class(case.config_at(M), exponents=exponents, threshold=self.threshold).applicability()
            except MimoLabError as err:
                verdicts.append({'M': M, 'error': str(err)})
                continue
            verdicts.append({'M': M, 'applicable': verdict.applicable, 'margin': verdict.margin, 'regime': verdict.regime.value})
        return verdicts
