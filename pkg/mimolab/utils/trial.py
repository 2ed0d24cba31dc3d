import logging
from dataclasses import dataclass

import numpy as np

from mimolab.choices import Precoder
from mimolab.models import NetworkConfig, SeedPath, TrialResult, ZfRealizedTerms
from mimolab.utils.mrt import rate_from_sinr
from mimolab.utils.precoding import get_analysis_class
from mimolab.utils.rng import complex_normal, trial_generator
from mimolab.utils.training import alias_factor, mmse_gain
from mimolab.utils.zf import zf_lambda, zf_precoder

logger = logging.getLogger(__name__)

__all__ = ('ClusterDraw', 'draw_cluster', 'realized_zf_terms', 'run_trial')


@dataclass(frozen=True, eq=False)
class ClusterDraw:
    """One coherent realization of the victim cell and its contaminating cells in beamspace.

    channels[b, u, k] is the channel from user k of cell u to base station b and
    estimates[b, k] the MMSE estimate base station b forms of its own user k. The
    estimate of a cell-u user at base station b is alias_factor(u) * estimates[b, k].
    """

    channels: np.ndarray
    estimates: np.ndarray
    observations: np.ndarray

    def estimate(self, station: int, cell: int, user: int, cfg: NetworkConfig) -> np.ndarray:
        factor = 1.0 if station == cell else alias_factor(1, cfg)
        return factor * self.estimates[station, user]

    def error(self, station: int, cell: int, user: int, cfg: NetworkConfig) -> np.ndarray:
        return self.channels[station, cell, user] - self.estimate(station, cell, user, cfg)


def draw_cluster(cfg: NetworkConfig, rng: np.random.Generator) -> ClusterDraw:
    """Draw channels, training noise and MMSE estimates in the Delta-dimensional beamspace.

    Inner products are preserved by the orthonormal basis, so beamspace vectors
    stand in for antenna-domain vectors in every SINR term.
    """
    n, K, delta = cfg.n_cells, cfg.K, cfg.delta

    beta = np.full((n, n), cfg.beta_cross)
    np.fill_diagonal(beta, cfg.beta_own)
    channels = np.sqrt(beta)[:, :, None, None] * complex_normal(rng, (n, n, K, delta))

    noise = complex_normal(rng, (n, K, delta))
    observations = np.sqrt(cfg.E_t) * channels.sum(axis=1) + noise
    estimates = mmse_gain(cfg, cfg.beta_own) * observations
    return ClusterDraw(channels=channels, estimates=estimates, observations=observations)


def realized_zf_terms(cluster: ClusterDraw, cfg: NetworkConfig, m: int = 0) -> ZfRealizedTerms:
    gain = cfg.rho * zf_lambda(cfg)
    error_power = 0.0
    for station in range(cfg.n_cells):
        W = zf_precoder(cluster.estimates[station].T)
        leakage = W.conj().T @ cluster.error(station, 0, m, cfg)
        error_power += float(np.vdot(leakage, leakage).real)

    pilot = gain * cfg.alpha**2 * cfg.L_p
    error_power *= gain
    sinr = gain / (1.0 + pilot + error_power)
    return ZfRealizedTerms(signal=gain, pilot_interference=pilot, error_power=error_power, sinr=sinr)


def run_trial(cfg: NetworkConfig, precoder: Precoder, seed_path: SeedPath) -> TrialResult:
    seed_path = SeedPath(*seed_path)
    rng = trial_generator(seed_path)
    cluster = draw_cluster(cfg, rng)

    components = get_analysis_class(precoder)(cfg).trial_terms(cluster)
    return TrialResult(
        sinr=components.sinr,
        rate=rate_from_sinr(components.sinr),
        components=components,
        trial_index=seed_path.trial_index,
        seed_path=seed_path,
    )
