import logging
from typing import Optional

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from mimolab.exceptions import ConfigurationError, SingularGramError
from mimolab.models import NetworkConfig, ZfQuantities
from mimolab.settings import get_lab_settings

logger = logging.getLogger(__name__)

__all__ = ('zf_precoder', 'zf_lambda', 'zf_error_power', 'chi_tilde', 'zf_sinr', 'zf_quantities')


def zf_precoder(H_hat: np.ndarray, condition_limit: Optional[float] = None) -> np.ndarray:
    """W = H (H^H H)^-1 through a Cholesky factorization of the Gram matrix.

    condition_limit defaults to the lab setting `analysis.condition_limit`.
    """
    if condition_limit is None:
        condition_limit = get_lab_settings().analysis.condition_limit
    H_hat = np.asarray(H_hat)
    if H_hat.ndim == 1:
        H_hat = H_hat[:, None]
    gram = H_hat.conj().T @ H_hat

    condition = float(np.linalg.cond(gram))
    if not np.isfinite(condition) or condition > condition_limit:
        raise SingularGramError(f'Gram matrix is singular to working precision (condition estimate {condition:.3e})', condition=condition)

    try:
        factor = cho_factor(gram, lower=True)
    except LinAlgError as err:
        raise SingularGramError(f'Gram matrix is not positive definite: {err}', condition=condition) from err
    return cho_solve(factor, H_hat.conj().T).conj().T


def _require_margin(cfg: NetworkConfig) -> None:
    if cfg.delta <= cfg.K:
        raise ConfigurationError(f'zero-forcing needs Delta > K, got Delta={cfg.delta}, K={cfg.K} at M={cfg.M}')


def zf_lambda(cfg: NetworkConfig) -> float:
    _require_margin(cfg)
    delta = cfg.delta
    return cfg.M * cfg.Q * (delta - cfg.K) / (delta * cfg.K)


def zf_error_power(cfg: NetworkConfig) -> float:
    Q, alpha = cfg.Q, cfg.alpha
    return cfg.rho / cfg.c_eff * (1.0 - Q + alpha * (1.0 - alpha * Q) * cfg.L_p)


def chi_tilde(cfg: NetworkConfig) -> float:
    return 1.0 + cfg.alpha * cfg.L_p - cfg.Q * (1.0 + cfg.alpha**2 * cfg.L_p)


def zf_sinr(cfg: NetworkConfig) -> float:
    _require_margin(cfg)
    K, Q, alpha, L_p = cfg.K, cfg.Q, cfg.alpha, cfg.L_p
    margin = cfg.delta - K
    return 1.0 / (cfg.c_eff * K / (cfg.rho * Q * margin) + alpha**2 * L_p + K * chi_tilde(cfg) / (Q * margin))


def zf_quantities(cfg: NetworkConfig) -> ZfQuantities:
    return ZfQuantities(lambda_=zf_lambda(cfg), p_e_bar=zf_error_power(cfg), sinr=zf_sinr(cfg), chi_tilde=chi_tilde(cfg))
