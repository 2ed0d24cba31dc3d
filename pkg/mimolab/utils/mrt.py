import logging

import numpy as np

from mimolab.choices import QuarticCase
from mimolab.exceptions import AsymptoticValidityError, DomainError
from mimolab.models import ComponentMoments, NetworkConfig, SinrBreakdown
from mimolab.utils.training import alias_factor

logger = logging.getLogger(__name__)

__all__ = (
    'pe_closed_form',
    'sinr_components',
    'instantaneous_sinr',
    'approximate_sinr',
    'component_moments',
    'gaussian_quartic_moments',
    'effective_sinr_mrt',
    'rate_from_sinr',
    'rate_lower_bound',
    'sum_rate_lower_bound',
)


def pe_closed_form(cfg: NetworkConfig) -> float:
    Q = cfg.Q
    return Q / ((cfg.L_p + 1) * cfg.c_eff) * (1.0 - Q + cfg.alpha * (1.0 - cfg.alpha * Q) * cfg.L_p)


def _denominator(cfg: NetworkConfig, P_i_in: float, P_i_out: float, P_e: float) -> float:
    K, L_p = cfg.K, cfg.L_p
    return (K - 1) * P_i_in + cfg.M * K * L_p * P_i_out + K * (L_p + 1) * P_e + K * cfg.Q / cfg.rho


def sinr_components(estimates: np.ndarray, cfg: NetworkConfig, m: int = 0) -> SinrBreakdown:
    """Split the MRT SINR of user m in cell 0 into its normalized powers.

    `estimates[b, k]` is the estimate base station b holds of its own user k, in
    antenna or beamspace coordinates; index 0 is the victim cell and 1..L_p the
    contaminating cells.
    """
    estimates = np.asarray(estimates)
    if estimates.ndim != 3 or estimates.shape[0] != cfg.L_p + 1 or estimates.shape[1] != cfg.K:
        raise DomainError(f'expected estimates of shape ({cfg.L_p + 1}, {cfg.K}, d), got {estimates.shape}')

    M, K, L_p = cfg.M, cfg.K, cfg.L_p
    own = estimates[0]
    victim = own[m]

    P_s = float(np.vdot(victim, victim).real ** 2 / M**2)

    if K > 1:
        inner = own.conj() @ victim
        inner = np.delete(inner, m)
        P_i_in = float(np.sum(np.abs(inner) ** 2) / M / (K - 1))
    else:
        P_i_in = 0.0

    if L_p > 0:
        total = 0.0
        for cell in range(1, L_p + 1):
            # base station `cell` sees the victim through its own pilot-sharing estimate
            aliased = alias_factor(cell, cfg) * estimates[cell, m]
            total += np.sum(np.abs(estimates[cell].conj() @ aliased) ** 2)
        P_i_out = float(total / M**2 / (K * L_p))
    else:
        P_i_out = 0.0

    P_e = pe_closed_form(cfg)
    sinr = M * P_s / _denominator(cfg, P_i_in, P_i_out, P_e)
    return SinrBreakdown(P_s=P_s, P_i_in=P_i_in, P_i_out=P_i_out, P_e=P_e, sinr=sinr, rate=rate_from_sinr(sinr))


def instantaneous_sinr(b: SinrBreakdown, cfg: NetworkConfig) -> float:
    return cfg.M * b.P_s / _denominator(cfg, b.P_i_in, b.P_i_out, b.P_e)


def approximate_sinr(b: SinrBreakdown, cfg: NetworkConfig) -> float:
    """SINR with the desired power replaced by its leading-order mean Q^2."""
    return cfg.M * cfg.Q**2 / _denominator(cfg, b.P_i_in, b.P_i_out, b.P_e)


def component_moments(cfg: NetworkConfig) -> ComponentMoments:
    Q, K, L_p, alpha = cfg.Q, cfg.K, cfg.L_p, cfg.alpha
    delta = float(cfg.delta)

    p_i_out_scv = None
    if L_p > 0:
        numerator = 4.0 + 5.0 * (K + 1) / delta + (K**2 + K + 4) / delta**2
        p_i_out_scv = numerator / (L_p * delta * (1.0 + K / delta) ** 2)

    return ComponentMoments(
        p_s_mean=Q**2 * (1.0 + 1.0 / delta),
        p_s_scv=4.0 / delta,
        p_i_in_mean=Q**2 / cfg.c_eff if K > 1 else 0.0,
        p_i_in_scv=1.0 / delta + 1.0 / (K - 1) if K > 1 else None,
        p_i_out_mean=alpha**2 * Q**2 * (1.0 / K + 1.0 / delta) if L_p > 0 else 0.0,
        p_i_out_scv=p_i_out_scv,
        p_e=pe_closed_form(cfg),
    )


def gaussian_quartic_moments(Delta: int, Q: float, c: float, case, exact: bool = False) -> float:
    """Closed-form moments of estimates distributed as CN(0, (Q/c) A A^H).

    With exact=True the Gamma-moment value is returned where the closed form
    relies on a Gaussian approximation of the inner product.
    """
    try:
        case = QuarticCase(case)
    except ValueError as err:
        raise DomainError(f'unknown moment case {case!r}') from err
    if Delta < 1:
        raise DomainError(f'Delta must be at least 1, got {Delta}')

    d = float(Delta)
    scale = Q / c

    if case == QuarticCase.NORM:
        return scale * d
    if case in (QuarticCase.NORM_PRODUCT_SAME, QuarticCase.CROSS_SAME):
        return scale**2 * d * (d + 1)
    if case == QuarticCase.NORM_PRODUCT_DISTINCT:
        return scale**2 * d**2
    if case == QuarticCase.CROSS_DISTINCT:
        return scale**2 * d

    polynomial = {
        QuarticCase.SAME_CELL_ALL_EQUAL: (d + 1) * (d + 2) * (d + 3),
        QuarticCase.SAME_CELL_PAIR: 2 * (d + 1) if exact else 2 * d,
        QuarticCase.SAME_CELL_SHARED_VICTIM: (d + 1) * (d + 2),
        QuarticCase.SAME_CELL_ALL_DISTINCT: d + 1,
        QuarticCase.OTHER_CELL_ALL_EQUAL: d * (d + 1) ** 2,
        QuarticCase.OTHER_CELL_DISTINCT: d,
        QuarticCase.OTHER_CELL_SHARED_VICTIM: d * (d + 1),
    }[case]
    return scale**4 * d * polynomial


def effective_sinr_mrt(cfg: NetworkConfig) -> float:
    M, K, L_p, alpha, Q, c = cfg.M, cfg.K, cfg.L_p, cfg.alpha, cfg.Q, cfg.c_eff
    denominator = K * (1 + alpha * L_p) / (M * Q * c) + L_p * alpha**2 - 1.0 / (M * c) + K / (M * Q * cfg.rho)
    if denominator <= 0:
        raise AsymptoticValidityError(f'asymptotic formula invalid at M={M}: effective SINR denominator is {denominator}', M=M, denominator=denominator)
    return 1.0 / denominator


def rate_from_sinr(sinr: float) -> float:
    return float(np.log2(1.0 + sinr))


def rate_lower_bound(cfg: NetworkConfig) -> float:
    return rate_from_sinr(effective_sinr_mrt(cfg))


def sum_rate_lower_bound(cfg: NetworkConfig, per_user_bound: float = None) -> float:
    if per_user_bound is None:
        per_user_bound = rate_lower_bound(cfg)
    return cfg.K * cfg.L * per_user_bound
