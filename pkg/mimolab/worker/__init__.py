import logging

import numpy as np

from mimolab.constants import MIN_SWEEP_TRIALS
from mimolab.exceptions import DomainError
from mimolab.jobs import CaseSweepJob, MomentVerificationJob, ReproducePresetJob
from mimolab.utils.montecarlo import collect_trials
from mimolab.utils.statistics import standard_error

logger = logging.getLogger('worker')

__all__ = ('estimate_ergodic_rate', 'verify_moments', 'run_case_sweep', 'reproduce_preset')


def estimate_ergodic_rate(cfg, precoder, n_trials, master_seed, case_id='adhoc', workers=1):
    if n_trials < MIN_SWEEP_TRIALS:
        raise DomainError(f'ergodic rate estimation needs at least {MIN_SWEEP_TRIALS} trials, got {n_trials}')
    samples = collect_trials(cfg, precoder, master_seed, case_id, n_trials, workers)
    return float(np.mean(samples.rate)), standard_error(samples.rate)


def verify_moments(cfg, n_trials=None, master_seed=None):
    job = MomentVerificationJob(cfg=cfg, n_trials=n_trials, master_seed=master_seed)
    return job.run()


def run_case_sweep(case, M_grid=None, n_trials=None, master_seed=None, workers=None, precoder=None):
    logger.info('Sweeping case %s', case.case_id)
    job = CaseSweepJob(case=case, grid=M_grid, n_trials=n_trials, master_seed=master_seed, workers=workers, precoder=precoder)
    return job.run()


def reproduce_preset(name, out_dir, master_seed=None, n_trials=None, workers=None, plots=True, grid=None):
    logger.info('Reproducing preset %s into %s', name, out_dir)
    job = ReproducePresetJob(name=name, out_dir=out_dir, master_seed=master_seed, n_trials=n_trials, workers=workers, plots=plots, grid=grid)
    return job.run()
