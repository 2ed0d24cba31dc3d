import logging

import numpy as np

from mimolab.exceptions import ConfigurationError
from mimolab.models import ChannelDraw, DirectionBasis, antenna_dimension
from mimolab.utils.rng import complex_normal

logger = logging.getLogger(__name__)

__all__ = ('build_direction_basis', 'pathloss_beta', 'correlation_matrix', 'draw_channel')


def build_direction_basis(M: int, c: float) -> DirectionBasis:
    if M < 2:
        raise ConfigurationError(f'M must be at least 2, got {M}')
    if not 0 < c <= 1:
        raise ConfigurationError(f'c must lie in (0, 1], got {c}')
    delta = antenna_dimension(M, c)
    if delta < 1:
        raise ConfigurationError(f'round(c*M) must be at least 1, got {delta} for c={c}, M={M}')

    A = np.fft.fft(np.eye(M), norm='ortho')[:, :delta]
    logger.debug(f'Built direction basis M={M}, Delta={delta}')
    return DirectionBasis(A=A, delta=delta, c=c)


def pathloss_beta(own_cell: bool, c: float, alpha: float, M: int = None) -> float:
    """M/Delta for own-cell links and alpha*M/Delta for contaminated links; 1/c and alpha/c without M."""
    if not 0 < c <= 1:
        raise ConfigurationError(f'c must lie in (0, 1], got {c}')
    if not 0 < alpha < 1:
        raise ConfigurationError(f'alpha must lie in (0, 1), got {alpha}')

    inverse_c = 1.0 / c if M is None else M / antenna_dimension(M, c)
    return inverse_c if own_cell else alpha * inverse_c


def correlation_matrix(basis: DirectionBasis, beta: float) -> np.ndarray:
    if beta <= 0:
        raise ConfigurationError(f'beta must be positive, got {beta}')
    return beta * basis.projector()


def draw_channel(basis: DirectionBasis, beta: float, rng: np.random.Generator) -> ChannelDraw:
    z = complex_normal(rng, basis.delta)
    h = np.sqrt(beta) * (basis.A @ z)
    return ChannelDraw(h=h, z=z, beta=beta)
