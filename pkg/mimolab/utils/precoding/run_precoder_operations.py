import logging

from mimolab.choices import Precoder

from .mrtanalysis import MrtAnalysis
from .zfanalysis import ZfAnalysis

logger = logging.getLogger(__name__)

ANALYSIS_CLASSES = {
    Precoder.MRT: MrtAnalysis,
    Precoder.ZF: ZfAnalysis,
}


def get_analysis_class(precoder):
    try:
        return ANALYSIS_CLASSES[Precoder(precoder)]
    except (KeyError, ValueError) as err:
        raise ValueError(f'Unknown precoder {precoder!r}') from err


def run_precoder_operation(analysis_class, cfg, operation, extra_args=None):
    """
    Generic dispatcher to run analysis_class.{operation} on a network configuration.
    """
    instance = analysis_class(cfg, **(extra_args or {}))

    method = getattr(instance, operation, None)
    if not callable(method):
        raise NotImplementedError(f'{analysis_class.__name__} does not implement `{operation}()`.')

    try:
        return method()
    except Exception as e:
        logger.debug(f'{analysis_class.__name__}.{operation}() failed at M={cfg.M}: {e}')
        raise
