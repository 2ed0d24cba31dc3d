import logging
import math
from concurrent.futures import ProcessPoolExecutor

import numpy as np
from pydantic import ValidationError

from mimolab.choices import Precoder
from mimolab.constants import MIN_SWEEP_TRIALS
from mimolab.exceptions import DomainError, MimoLabError
from mimolab.models import SweepResult, SweepRow
from mimolab.settings import get_lab_settings
from mimolab.utils.montecarlo import collect_trials
from mimolab.utils.mrt import rate_from_sinr
from mimolab.utils.precoding import get_analysis_class, run_precoder_operation
from mimolab.utils.statistics import effective_value, estimate_scv, scv_standard_error, standard_error

logger = logging.getLogger(__name__)

__all__ = ('CaseSweepJob',)


class CaseSweepJob:
    def __init__(self, **kwargs):
        settings = get_lab_settings()
        self.case = kwargs.get('case')
        self.grid = list(kwargs.get('grid') or self.case.grid)
        self.n_trials = kwargs.get('n_trials') or settings.simulation.n_trials
        self.master_seed = settings.master_seed if kwargs.get('master_seed') is None else kwargs['master_seed']
        self.workers = kwargs.get('workers') or settings.simulation.workers
        self.chunk_size = kwargs.get('chunk_size') or settings.simulation.chunk_size
        self.precoder = Precoder(kwargs.get('precoder') or self.case.precoder)

        if self.n_trials < MIN_SWEEP_TRIALS:
            raise DomainError(f'sweeps need at least {MIN_SWEEP_TRIALS} trials per point, got {self.n_trials}')
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise DomainError(f'M grid must be strictly increasing, got {self.grid}')

    def run(self) -> SweepResult:
        if self.workers > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                rows = [self.run_row(M, executor) for M in self.grid]
        else:
            rows = [self.run_row(M) for M in self.grid]
        return SweepResult(case_id=self.case.case_id, precoder=self.precoder, master_seed=self.master_seed, rows=rows)

    def run_row(self, M: int, executor=None) -> SweepRow:
        try:
            cfg = self.case.config_at(M)
        except (MimoLabError, ValidationError) as err:
            logger.warning('Skipping case %s at M=%s: %s', self.case.case_id, M, err)
            return SweepRow(M=M, error=str(err))

        parameters = {'K': cfg.K, 'rho': cfg.rho, 'E_t': cfg.E_t, 'L_p': cfg.L_p}
        analysis_class = get_analysis_class(self.precoder)
        error = None
        try:
            analytic = run_precoder_operation(analysis_class, cfg, 'effective_sinr')
        except MimoLabError as err:
            logger.warning('Closed form unavailable for case %s at M=%s: %s', self.case.case_id, M, err)
            analytic, error = math.nan, str(err)

        try:
            samples = collect_trials(cfg, self.precoder, self.master_seed, self.case.case_id, self.n_trials, self.workers, self.chunk_size, executor)
        except MimoLabError as err:
            logger.warning('Simulation failed for case %s at M=%s: %s', self.case.case_id, M, err)
            return SweepRow(M=M, error=str(err), **parameters)

        users = cfg.K * cfg.L
        effective, effective_se = effective_value(samples.sinr)
        logger.info('Case %s, %s, M=%s: effective SINR %.4g (closed form %.4g)', self.case.case_id, self.precoder.value, M, effective, analytic)
        return SweepRow(
            M=M,
            n_trials=samples.n_trials,
            mean_sinr=float(np.mean(samples.sinr)),
            se_mean_sinr=standard_error(samples.sinr),
            effective_sinr_simulated=effective,
            se_effective_sinr=effective_se,
            effective_sinr_analytic=analytic,
            ergodic_sum_rate=users * float(np.mean(samples.rate)),
            se_sum_rate=users * standard_error(samples.rate),
            sum_rate_lower_bound=users * rate_from_sinr(analytic) if math.isfinite(analytic) else math.nan,
            scv_sinr=estimate_scv(samples.sinr),
            se_scv_sinr=scv_standard_error(samples.sinr),
            error=error,
            **parameters,
        )
