from dataclasses import asdict, dataclass
from typing import Optional

__all__ = ('SinrBreakdown', 'MomentReport', 'ComponentMoments')


@dataclass(frozen=True)
class SinrBreakdown:
    P_s: float
    P_i_in: float
    P_i_out: float
    P_e: float
    sinr: float
    rate: float

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class MomentReport:
    mean: float
    scv: float
    n_trials: int
    standard_error: float


@dataclass(frozen=True)
class ComponentMoments:
    p_s_mean: float
    p_s_scv: float
    p_i_in_mean: float
    p_i_in_scv: Optional[float]
    p_i_out_mean: float
    p_i_out_scv: Optional[float]
    p_e: float

    def to_dict(self):
        return asdict(self)
