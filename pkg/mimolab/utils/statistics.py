import math
from typing import Sequence, Tuple

import numpy as np
from scipy import stats

from mimolab.exceptions import DomainError
from mimolab.models import MomentReport

__all__ = (
    'estimate_scv',
    'scv_standard_error',
    'standard_error',
    'moment_report',
    'effective_value',
    'estimate_exponent',
    'fit_power_decay',
)


def estimate_scv(samples: Sequence[float]) -> float:
    """Unbiased sample variance over the squared sample mean."""
    values = np.asarray(samples, dtype=float)
    if values.size < 2:
        raise DomainError(f'SCV needs at least 2 samples, got {values.size}')
    mean = values.mean()
    if mean == 0:
        raise DomainError('SCV is undefined for samples with zero mean')
    return float(values.var(ddof=1) / mean**2)


def scv_standard_error(samples: Sequence[float], batches: int = 20) -> float:
    """Batch-means standard error of the sample SCV."""
    values = np.asarray(samples, dtype=float)
    if values.size < 2 * batches:
        return math.nan
    batch_scv = [estimate_scv(batch) for batch in np.array_split(values, batches)]
    return float(np.std(batch_scv, ddof=1) / math.sqrt(batches))


def standard_error(samples: Sequence[float]) -> float:
    values = np.asarray(samples, dtype=float)
    if values.size < 2:
        return math.nan
    return float(values.std(ddof=1) / math.sqrt(values.size))


def moment_report(samples: Sequence[float]) -> MomentReport:
    values = np.asarray(samples, dtype=float)
    return MomentReport(mean=float(values.mean()), scv=estimate_scv(values), n_trials=int(values.size), standard_error=standard_error(values))


def effective_value(samples: Sequence[float]) -> Tuple[float, float]:
    """1/mean(1/x) and its delta-method standard error."""
    inverse = 1.0 / np.asarray(samples, dtype=float)
    mean_inverse = float(inverse.mean())
    return 1.0 / mean_inverse, standard_error(inverse) / mean_inverse**2


def _log_points(points) -> Tuple[np.ndarray, np.ndarray]:
    points = list(points)
    if len(points) < 3:
        raise DomainError(f'fitting needs at least 3 points, got {len(points)}')
    M = np.array([float(p[0]) for p in points])
    values = np.array([float(p[1]) for p in points])
    if np.any(np.diff(M) <= 0):
        raise DomainError('M values must be strictly increasing')
    if np.any(M <= 0) or np.any(~np.isfinite(values)) or np.any(values <= 0):
        raise DomainError('power-law fitting needs positive M and positive, finite values')
    return np.log(M), np.log(values)


def estimate_exponent(points) -> float:
    """Least-squares slope of log(value) against log(M)."""
    log_M, log_values = _log_points(points)
    return float(stats.linregress(log_M, log_values).slope)


def fit_power_decay(points) -> Tuple[float, float]:
    """Fit value ~ a / M**b; returns (a, b)."""
    log_M, log_values = _log_points(points)
    fit = stats.linregress(log_M, log_values)
    return float(math.exp(fit.intercept)), float(-fit.slope)
