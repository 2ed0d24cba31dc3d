import logging
from pathlib import Path

import matplotlib

matplotlib.use('Agg')

import matplotlib.pyplot as plt  # noqa: E402

from mimolab.choices import Metric  # noqa: E402

logger = logging.getLogger(__name__)

__all__ = ('plot_preset',)

LINE_STYLES = {
    Metric.EFFECTIVE_SINR_SIMULATED.value: {'marker': 'o', 'linestyle': '-'},
    Metric.EFFECTIVE_SINR_ANALYTIC.value: {'marker': '', 'linestyle': '--'},
    Metric.REFERENCE_SLOPE.value: {'marker': '', 'linestyle': ':'},
    Metric.ERGODIC_SUM_RATE.value: {'marker': 'o', 'linestyle': '-'},
    Metric.SUM_RATE_LOWER_BOUND.value: {'marker': 'x', 'linestyle': '--'},
    Metric.SCV_SINR.value: {'marker': 's', 'linestyle': '-'},
    Metric.SCV_FIT.value: {'marker': '', 'linestyle': ':'},
}


def plot_preset(frame, preset: dict, path) -> Path:
    """Line plot of every (case, metric) series; SINR and SCV on a log y axis, rates linear."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(8, 5))

    for (case_id, metric), series in frame.groupby(['case_id', 'metric'], sort=False):
        series = series.dropna(subset=['value']).sort_values('M')
        if series.empty:
            continue
        ax.plot(series['M'], series['value'], label=f'{case_id} {metric}', **LINE_STYLES.get(metric, {}))

    if 'rate' not in preset['ylabel'].lower():
        ax.set_yscale('log')
    ax.set_xlabel('Number of BS antennas M')
    ax.set_ylabel(preset['ylabel'])
    ax.set_title(preset['title'])
    ax.grid(True, which='both', alpha=0.3)
    ax.legend(fontsize='x-small', ncol=2)
    fig.tight_layout()
    fig.savefig(path, format='svg')
    plt.close(fig)
    logger.info('Wrote plot %s', path)
    return path
