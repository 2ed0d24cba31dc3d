import logging

from mimolab.constants import DOMINANCE_THRESHOLD
from mimolab.models import NetworkConfig
from mimolab.utils.mrt import rate_from_sinr

logger = logging.getLogger(__name__)


class PrecoderAnalysisBase:
    precoder = None
    # closed form used for the dotted reference curves
    reference_label: str = None

    def __init__(self, cfg: NetworkConfig, **kwargs):
        self.cfg = cfg
        self.context = kwargs  # exponents, threshold, ...

        if self.precoder is None:
            raise ValueError(f'{self.__class__.__name__} must define `precoder`.')

    @property
    def exponents(self):
        return self.context.get('exponents')

    @property
    def threshold(self) -> float:
        return self.context.get('threshold', DOMINANCE_THRESHOLD)

    def effective_sinr(self) -> float:
        raise NotImplementedError

    def applicability(self):
        raise NotImplementedError

    def trial_terms(self, cluster):
        raise NotImplementedError

    def rate_lower_bound(self) -> float:
        return rate_from_sinr(self.effective_sinr())

    def sum_rate_lower_bound(self) -> float:
        return self.cfg.K * self.cfg.L * self.rate_lower_bound()

    def summary(self) -> dict:
        sinr = self.effective_sinr()
        logger.debug(f'{self.__class__.__name__} at M={self.cfg.M}: effective SINR {sinr:.6g}')
        return {
            'precoder': self.precoder.value,
            'effective_sinr': sinr,
            'rate_lower_bound': rate_from_sinr(sinr),
            'sum_rate_lower_bound': self.cfg.K * self.cfg.L * rate_from_sinr(sinr),
        }
