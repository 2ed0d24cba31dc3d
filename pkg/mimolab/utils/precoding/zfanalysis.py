from mimolab.choices import Precoder
from mimolab.utils.scaling import zf_applicability
from mimolab.utils.zf import zf_quantities, zf_sinr

from .analysisbase import PrecoderAnalysisBase


class ZfAnalysis(PrecoderAnalysisBase):
    precoder = Precoder.ZF
    reference_label = 'zf_sinr'

    def effective_sinr(self) -> float:
        return zf_sinr(self.cfg)

    def applicability(self):
        return zf_applicability(self.cfg, self.exponents, threshold=self.threshold)

    def trial_terms(self, cluster):
        from mimolab.utils.trial import realized_zf_terms

        return realized_zf_terms(cluster, self.cfg)

    def summary(self) -> dict:
        return {**super().summary(), 'quantities': zf_quantities(self.cfg).to_dict()}
