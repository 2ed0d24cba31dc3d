import logging
import math
from typing import Dict, List, Optional, Tuple

from mimolab.choices import Regime
from mimolab.constants import DOMINANCE_THRESHOLD
from mimolab.exceptions import ConfigurationError
from mimolab.models import ApplicabilityVerdict, NetworkConfig, ScalingExponents

logger = logging.getLogger(__name__)

__all__ = (
    'scaling_exponent',
    'non_decreasing_check',
    'deterministic_check',
    'mrt_applicability',
    'zf_applicability',
)

# exponent sums closer than this are treated as equal
EXPONENT_TOLERANCE = 1e-9


def scaling_exponent(s: ScalingExponents) -> float:
    if s.perfect_pce:
        return s.noise_exponent
    return min(s.noise_exponent, s.r_gamma)


def non_decreasing_check(s: ScalingExponents) -> bool:
    return s.r_t + s.r_k + s.r_rho <= 1.0 + EXPONENT_TOLERANCE


def deterministic_check(s: ScalingExponents) -> bool:
    if not s.perfect_pce:
        return True
    return 2 * s.r_t + s.r_k + 2 * s.r_rho >= 1.0 - EXPONENT_TOLERANCE


def _ratio(dominant: float, rest: float) -> float:
    if rest <= 0:
        return math.inf
    return dominant / rest


def _branch(s: ScalingExponents) -> int:
    # the contamination term decays as M**-r_gamma, which is 0 for constant PCE
    gap = s.noise_exponent - (0.0 if s.perfect_pce else s.r_gamma)
    if abs(gap) <= EXPONENT_TOLERANCE:
        return 0
    return -1 if gap < 0 else 1


def _at(cfg: NetworkConfig, M: Optional[int]) -> NetworkConfig:
    if M is None or M == cfg.M:
        return cfg
    return cfg.with_updates(M=M)


def _verdict(conditions: List[Tuple[str, ...]], ratios: Dict[str, float], regime: Regime, threshold: float, diagnostics: Dict[str, float]) -> ApplicabilityVerdict:
    """Each entry of `conditions` is a conjunction of ratio labels; the entries are alternatives."""
    best_margin, best_index = -math.inf, 0
    passed = []
    for index, conjunction in enumerate(conditions):
        margin = min(ratios[label] for label in conjunction)
        if margin >= threshold:
            passed.extend(label for label in conjunction if label not in passed)
        if margin > best_margin:
            best_margin, best_index = margin, index

    dominant = conditions[best_index][0]
    diagnostics = {**diagnostics, **{f'ratio_{label}': value for label, value in ratios.items()}}
    logger.debug(f'Applicability {regime.value}: margin {best_margin:.4g} against threshold {threshold}')
    return ApplicabilityVerdict(
        applicable=best_margin >= threshold,
        dominant_term=dominant,
        margin=best_margin,
        regime=regime,
        threshold=threshold,
        passed=tuple(passed),
        diagnostics=diagnostics,
    )


def mrt_applicability(cfg: NetworkConfig, s: ScalingExponents, M: Optional[int] = None, threshold: float = DOMINANCE_THRESHOLD) -> ApplicabilityVerdict:
    cfg = _at(cfg, M)
    M, K, Q, c, rho, alpha, L_p = cfg.M, cfg.K, cfg.Q, cfg.c_eff, cfg.rho, cfg.alpha, cfg.L_p

    if L_p == 0:
        ratios = {'noise': _ratio(1.0 / rho, (1.0 - Q / K) / c)}
        conditions = [('noise',)]
        if s.r_rho <= EXPONENT_TOLERANCE:
            ratios['users_over_quality'] = _ratio(K / Q, 1.0 / (1.0 + c / rho))
            conditions.append(('users_over_quality',))
        return _verdict(conditions, ratios, Regime.PERFECT_PCE, threshold, {})

    chi = K / Q * (1.0 + alpha * L_p) - 1.0
    ratios = {
        'noise': _ratio(K / (M * Q * rho), chi / (M * c) + L_p * alpha**2),
        'pilot_contamination': _ratio(L_p * alpha**2, (chi / c + K / (Q * rho)) / M),
        'noise_over_csi': _ratio(K / (Q * rho), chi / c),
    }

    branch = _branch(s)
    if branch < 0:
        conditions, regime = [('noise',)], Regime.NOISE_LIMITED
    elif branch > 0:
        conditions, regime = [('pilot_contamination',)], Regime.CONTAMINATION_LIMITED
    else:
        conditions, regime = [('pilot_contamination',), ('noise_over_csi',)], Regime.BALANCED
    return _verdict(conditions, ratios, regime, threshold, {'chi': chi})


def zf_applicability(cfg: NetworkConfig, s: ScalingExponents, M: Optional[int] = None, threshold: float = DOMINANCE_THRESHOLD) -> ApplicabilityVerdict:
    cfg = _at(cfg, M)
    M, K, Q, c, rho, alpha, L_p = cfg.M, cfg.K, cfg.Q, cfg.c_eff, cfg.rho, cfg.alpha, cfg.L_p
    delta = cfg.delta
    if delta <= K:
        raise ConfigurationError(f'zero-forcing needs Delta > K, got Delta={delta}, K={K} at M={M}')

    if L_p == 0:
        ratios = {
            'noise': _ratio(1.0 / rho, (1.0 - Q) / c),
            'dimension': delta / K,
        }
        if s.r_k >= 1.0 - EXPONENT_TOLERANCE:
            return _verdict([('noise',)], ratios, Regime.FULL_LOAD, threshold, {})
        return _verdict([('noise', 'dimension')], ratios, Regime.PERFECT_PCE, threshold, {})

    chi = 1.0 + alpha * L_p - Q * (1.0 + alpha**2 * L_p)
    ratios = {
        'noise': _ratio(1.0 / rho, alpha**2 * L_p * Q * M / K + chi / c),
        'pilot_contamination': _ratio(L_p * alpha**2, K * (c / rho + chi) / (Q * (delta - K))),
        'noise_over_csi': _ratio(1.0 / rho, chi / c),
        'dimension': delta / K,
    }

    branch = _branch(s)
    if branch < 0:
        conditions, regime = [('noise', 'dimension')], Regime.NOISE_LIMITED
    elif branch > 0:
        conditions, regime = [('pilot_contamination',)], Regime.CONTAMINATION_LIMITED
    else:
        conditions, regime = [('pilot_contamination',), ('noise_over_csi', 'dimension')], Regime.BALANCED
    return _verdict(conditions, ratios, regime, threshold, {'chi_tilde': chi})
