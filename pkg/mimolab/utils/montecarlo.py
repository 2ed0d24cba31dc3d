import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np

from mimolab.choices import Precoder
from mimolab.models import NetworkConfig, SeedPath
from mimolab.utils.trial import run_trial

logger = logging.getLogger(__name__)

__all__ = ('TrialSamples', 'run_trial_chunk', 'collect_trials')


@dataclass(frozen=True, eq=False)
class TrialSamples:
    sinr: np.ndarray
    rate: np.ndarray
    components: Dict[str, np.ndarray] = field(default_factory=dict)

    @property
    def n_trials(self) -> int:
        return int(self.sinr.size)


def run_trial_chunk(cfg: NetworkConfig, precoder: Precoder, master_seed: int, case_id: str, start: int, stop: int) -> Dict[str, List[float]]:
    chunk = {'sinr': [], 'rate': []}
    for trial_index in range(start, stop):
        result = run_trial(cfg, precoder, SeedPath(master_seed, case_id, cfg.M, trial_index))
        chunk['sinr'].append(result.sinr)
        chunk['rate'].append(result.rate)
        for name, value in result.components.to_dict().items():
            if name not in ('sinr', 'rate'):
                chunk.setdefault(name, []).append(value)
    logger.debug('Finished trials %s-%s of case %s at M=%s', start, stop, case_id, cfg.M)
    return chunk


def _chunks(n_trials: int, chunk_size: int):
    return [(start, min(start + chunk_size, n_trials)) for start in range(0, n_trials, chunk_size)]


def collect_trials(
    cfg: NetworkConfig,
    precoder: Precoder,
    master_seed: int,
    case_id: str,
    n_trials: int,
    workers: int = 1,
    chunk_size: int = 250,
    executor=None,
) -> TrialSamples:
    """Run n_trials independent trials and stack them in trial-index order."""
    bounds = _chunks(n_trials, chunk_size)

    if executor is not None:
        futures = [executor.submit(run_trial_chunk, cfg, precoder, master_seed, case_id, start, stop) for start, stop in bounds]
        chunks = [future.result() for future in futures]
    elif workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(run_trial_chunk, cfg, precoder, master_seed, case_id, start, stop) for start, stop in bounds]
            chunks = [future.result() for future in futures]
    else:
        chunks = [run_trial_chunk(cfg, precoder, master_seed, case_id, start, stop) for start, stop in bounds]

    merged = {}
    for chunk in chunks:
        for name, values in chunk.items():
            merged.setdefault(name, []).extend(values)

    arrays = {name: np.asarray(values, dtype=float) for name, values in merged.items()}
    sinr, rate = arrays.pop('sinr'), arrays.pop('rate')
    return TrialSamples(sinr=sinr, rate=rate, components=arrays)
