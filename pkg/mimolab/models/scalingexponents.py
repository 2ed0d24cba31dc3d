from dataclasses import dataclass, field
from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, Field

from mimolab.choices import Regime

__all__ = ('ScalingExponents', 'ApplicabilityVerdict')


class ScalingExponents(BaseModel):
    model_config = ConfigDict(frozen=True)

    r_t: float = Field(default=0.0, ge=0, le=1)
    r_k: float = Field(default=0.0, ge=0, le=1)
    r_rho: float = Field(default=0.0, ge=0, le=1)
    r_gamma: float = Field(default=0.0, ge=0, le=1)
    perfect_pce: bool = Field(default=True)

    @property
    def noise_exponent(self) -> float:
        return 1.0 - self.r_t - self.r_k - self.r_rho


@dataclass(frozen=True)
class ApplicabilityVerdict:
    applicable: bool
    dominant_term: str
    margin: float
    regime: Regime
    threshold: float
    passed: Tuple[str, ...] = ()
    diagnostics: Dict[str, float] = field(default_factory=dict)

    def to_dict(self):
        return {
            'applicable': self.applicable,
            'dominant_term': self.dominant_term,
            'margin': self.margin,
            'regime': self.regime.value,
            'threshold': self.threshold,
            'passed': list(self.passed),
            'diagnostics': dict(self.diagnostics),
        }
