from enum import Enum

__all__ = ('Metric',)


class Metric(str, Enum):
    MEAN_SINR = 'mean_sinr'
    EFFECTIVE_SINR_SIMULATED = 'effective_sinr_simulated'
    EFFECTIVE_SINR_ANALYTIC = 'effective_sinr_analytic'
    REFERENCE_SLOPE = 'reference_slope'
    ERGODIC_SUM_RATE = 'ergodic_sum_rate'
    SUM_RATE_LOWER_BOUND = 'sum_rate_lower_bound'
    SCV_SINR = 'scv_sinr'
    SCV_FIT = 'scv_fit'
