from mimolab.choices import Precoder
from mimolab.utils.mrt import effective_sinr_mrt, component_moments, sinr_components
from mimolab.utils.scaling import mrt_applicability

from .analysisbase import PrecoderAnalysisBase


class MrtAnalysis(PrecoderAnalysisBase):
    precoder = Precoder.MRT
    reference_label = 'effective_sinr_mrt'

    def effective_sinr(self) -> float:
        return effective_sinr_mrt(self.cfg)

    def applicability(self):
        return mrt_applicability(self.cfg, self.exponents, threshold=self.threshold)

    def trial_terms(self, cluster):
        return sinr_components(cluster.estimates, self.cfg)

    def summary(self) -> dict:
        return {**super().summary(), 'moments': component_moments(self.cfg).to_dict()}
