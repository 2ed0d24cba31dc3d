import logging
from typing import Optional, Sequence

import numpy as np
from scipy.linalg import solve

from mimolab.exceptions import ConfigurationError, DomainError
from mimolab.models import ChannelDraw, CsiEstimate, CsiQuality, DirectionBasis, NetworkConfig
from mimolab.settings import get_lab_settings
from mimolab.utils.rng import complex_normal

logger = logging.getLogger(__name__)

__all__ = ('training_observation', 'csi_quality', 'mmse_gain', 'mmse_estimate', 'alias_factor')


def training_observation(own: ChannelDraw, contaminating: Sequence[ChannelDraw], E_t: float, rng: np.random.Generator) -> np.ndarray:
    """y = sqrt(E_t) * (h_own + sum of contaminating channels) + n."""
    total = own.h.copy()
    for draw in contaminating:
        total = total + draw.h
    noise = complex_normal(rng, total.shape[0])
    return np.sqrt(E_t) * total + noise


def csi_quality(cfg: NetworkConfig) -> CsiQuality:
    return CsiQuality(Q=cfg.Q)


def mmse_gain(cfg: NetworkConfig, target_beta: float) -> float:
    """Scalar multiplying A A^H y in the MMSE estimate of a link with path loss target_beta."""
    received_beta = cfg.beta_own + cfg.L_p * cfg.beta_cross
    return np.sqrt(cfg.E_t) * target_beta / (cfg.E_t * received_beta + 1.0)


def mmse_estimate(
    y: np.ndarray,
    basis: DirectionBasis,
    cfg: NetworkConfig,
    target_beta: float,
    true_channel: Optional[np.ndarray] = None,
    literal: bool = False,
) -> CsiEstimate:
    if y.shape != (basis.M,) or basis.M != cfg.M:
        raise DomainError(f'observation of shape {y.shape} does not match M={cfg.M} and basis M={basis.M}')

    if literal:
        literal_max_M = get_lab_settings().analysis.literal_max_M
        if cfg.M > literal_max_M:
            raise ConfigurationError(f'literal MMSE is limited to M <= {literal_max_M}, got M={cfg.M}')
        projector = basis.projector()
        received = cfg.E_t * (cfg.beta_own + cfg.L_p * cfg.beta_cross) * projector + np.eye(cfg.M)
        h_hat = np.sqrt(cfg.E_t) * target_beta * projector @ solve(received, y, assume_a='pos')
    else:
        h_hat = mmse_gain(cfg, target_beta) * basis.from_beamspace(basis.to_beamspace(y))

    h_err = None if true_channel is None else true_channel - h_hat
    return CsiEstimate(h_hat=h_hat, h_err=h_err, beta=target_beta, Q=cfg.Q, c=cfg.c_eff)


def alias_factor(cell: int, cfg: NetworkConfig) -> float:
    """Ratio between the estimate of a cell-`cell` user and the own-cell estimate sharing its pilot."""
    if cell == 0:
        return 1.0
    if 1 <= cell <= cfg.L_p:
        return cfg.c_eff * cfg.beta_cross
    raise DomainError(f'cell {cell} is neither the own cell (0) nor one of the {cfg.L_p} contaminating cells')
