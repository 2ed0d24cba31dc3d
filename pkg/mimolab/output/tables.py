import logging
import math
from pathlib import Path
from typing import Iterable, List, Optional

import pandas as pd

from mimolab.choices import Metric
from mimolab.constants import CSV_COLUMNS
from mimolab.models import SweepResult

logger = logging.getLogger(__name__)

__all__ = ('sweep_records', 'scv_fit_records', 'records_to_frame', 'write_metric_csv')

# metric -> (row attribute, standard error attribute)
ROW_METRICS = {
    Metric.MEAN_SINR: ('mean_sinr', 'se_mean_sinr'),
    Metric.EFFECTIVE_SINR_SIMULATED: ('effective_sinr_simulated', 'se_effective_sinr'),
    Metric.EFFECTIVE_SINR_ANALYTIC: ('effective_sinr_analytic', None),
    Metric.ERGODIC_SUM_RATE: ('ergodic_sum_rate', 'se_sum_rate'),
    Metric.SUM_RATE_LOWER_BOUND: ('sum_rate_lower_bound', None),
    Metric.SCV_SINR: ('scv_sinr', 'se_scv_sinr'),
}


def _record(case_id, M, metric, value, stderr=math.nan):
    return {'case_id': case_id, 'M': M, 'metric': Metric(metric).value, 'value': value, 'stderr': stderr}


def sweep_records(sweep: SweepResult, metrics: Iterable[Metric], reference_exponent: Optional[float] = None) -> List[dict]:
    """Long-format records of a sweep; the reference slope starts at the first closed-form point."""
    metrics = list(metrics)
    records = []
    for metric in metrics:
        if metric not in ROW_METRICS:
            continue
        value_attr, se_attr = ROW_METRICS[metric]
        for row in sweep.rows:
            stderr = getattr(row, se_attr) if se_attr else 0.0
            records.append(_record(sweep.case_id, row.M, metric, getattr(row, value_attr), stderr))

    anchors = sweep.points('effective_sinr_analytic')
    if Metric.REFERENCE_SLOPE in metrics and reference_exponent is not None and anchors:
        M0, value0 = anchors[0]
        for row in sweep.rows:
            records.append(_record(sweep.case_id, row.M, Metric.REFERENCE_SLOPE, value0 * (row.M / M0) ** reference_exponent, 0.0))
    return records


def scv_fit_records(case_id: str, grid: Iterable[int], a: float, b: float) -> List[dict]:
    return [_record(case_id, M, Metric.SCV_FIT, a / M**b, 0.0) for M in grid]


def records_to_frame(records: List[dict]) -> pd.DataFrame:
    return pd.DataFrame.from_records(records, columns=list(CSV_COLUMNS))


def write_metric_csv(records: List[dict], path, float_format: str = '%.10g') -> Path:
    path = Path(path)
    records_to_frame(records).to_csv(path, index=False, float_format=float_format)
    logger.info('Wrote %s metric rows to %s', len(records), path)
    return path
