from mimolab.choices import Metric, Precoder

__all__ = ('FIGURE_PRESETS', 'PRESET_NAMES')

FIGURE_PRESETS = {
    'fig1': {
        'table': 'table1',
        'precoder': Precoder.MRT,
        'cases': None,
        'metrics': [Metric.EFFECTIVE_SINR_SIMULATED, Metric.EFFECTIVE_SINR_ANALYTIC, Metric.REFERENCE_SLOPE],
        'title': 'Effective SINR of MRT, perfect PCE',
        'ylabel': 'Effective SINR',
    },
    'fig2': {
        'table': 'table1',
        'precoder': Precoder.MRT,
        'cases': None,
        'metrics': [Metric.ERGODIC_SUM_RATE, Metric.SUM_RATE_LOWER_BOUND],
        'title': 'Simulated sum-rate and sum-rate lower bound of MRT',
        'ylabel': 'Sum rate (bits/s/Hz)',
    },
    'fig3': {
        'table': 'table1',
        'precoder': Precoder.MRT,
        'cases': ['case1', 'case4', 'case5', 'case6'],
        'metrics': [Metric.SCV_SINR, Metric.SCV_FIT],
        'title': 'SCV of the MRT SINR',
        'ylabel': 'SCV',
    },
    'fig4': {
        'table': 'table2',
        'precoder': Precoder.MRT,
        'cases': None,
        'metrics': [Metric.EFFECTIVE_SINR_SIMULATED, Metric.EFFECTIVE_SINR_ANALYTIC, Metric.REFERENCE_SLOPE],
        'title': 'Effective SINR of MRT, imperfect PCE',
        'ylabel': 'Effective SINR',
    },
    'fig5': {
        'table': 'table2',
        'precoder': Precoder.MRT,
        'cases': None,
        'metrics': [Metric.ERGODIC_SUM_RATE, Metric.SUM_RATE_LOWER_BOUND],
        'title': 'Sum-rate of MRT, imperfect PCE',
        'ylabel': 'Sum rate (bits/s/Hz)',
    },
    'fig6': {
        'table': 'table1',
        'precoder': Precoder.ZF,
        'cases': None,
        'metrics': [Metric.EFFECTIVE_SINR_SIMULATED, Metric.EFFECTIVE_SINR_ANALYTIC, Metric.REFERENCE_SLOPE],
        'title': 'Effective SINR of ZF, perfect PCE',
        'ylabel': 'Effective SINR',
    },
    'fig7': {
        'table': 'table2',
        'precoder': Precoder.ZF,
        'cases': None,
        'metrics': [Metric.EFFECTIVE_SINR_SIMULATED, Metric.EFFECTIVE_SINR_ANALYTIC, Metric.REFERENCE_SLOPE],
        'title': 'Effective SINR of ZF, imperfect PCE',
        'ylabel': 'Effective SINR',
    },
    'table1': {
        'table': 'table1',
        'precoder': None,
        'cases': None,
        'metrics': list(Metric),
        'title': 'Perfect PCE parameter settings',
        'ylabel': 'Value',
    },
    'table2': {
        'table': 'table2',
        'precoder': None,
        'cases': None,
        'metrics': list(Metric),
        'title': 'Imperfect PCE parameter settings',
        'ylabel': 'Value',
    },
}

PRESET_NAMES = tuple(FIGURE_PRESETS)
