import math
from dataclasses import asdict, dataclass, field
from typing import List, NamedTuple, Optional, Union

from mimolab.choices import Precoder

from .sinrbreakdown import SinrBreakdown
from .zfquantities import ZfRealizedTerms

__all__ = ('SeedPath', 'TrialResult', 'SweepRow', 'SweepResult', 'MomentEntry', 'MomentVerificationReport')


class SeedPath(NamedTuple):
    master_seed: int
    case_id: str
    M: int
    trial_index: int


@dataclass(frozen=True)
class TrialResult:
    sinr: float
    rate: float
    components: Union[SinrBreakdown, ZfRealizedTerms]
    trial_index: int
    seed_path: SeedPath


@dataclass(frozen=True)
class SweepRow:
    M: int
    K: Optional[int] = None
    rho: Optional[float] = None
    E_t: Optional[float] = None
    L_p: Optional[int] = None
    n_trials: int = 0
    mean_sinr: float = math.nan
    se_mean_sinr: float = math.nan
    effective_sinr_simulated: float = math.nan
    se_effective_sinr: float = math.nan
    effective_sinr_analytic: float = math.nan
    ergodic_sum_rate: float = math.nan
    se_sum_rate: float = math.nan
    sum_rate_lower_bound: float = math.nan
    scv_sinr: float = math.nan
    se_scv_sinr: float = math.nan
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class SweepResult:
    case_id: str
    precoder: Precoder
    master_seed: int
    rows: List[SweepRow] = field(default_factory=list)

    def valid_rows(self) -> List[SweepRow]:
        return [row for row in self.rows if row.ok]

    def points(self, metric: str):
        """(M, value) pairs of every row where the metric is finite."""
        return [(row.M, getattr(row, metric)) for row in self.rows if math.isfinite(getattr(row, metric))]


@dataclass(frozen=True)
class MomentEntry:
    name: str
    analytic: float
    empirical: float
    standard_error: float
    clt_value: Optional[float] = None

    @property
    def z(self) -> float:
        if self.standard_error <= 0:
            return 0.0 if self.empirical == self.analytic else math.inf
        return (self.empirical - self.analytic) / self.standard_error

    def to_dict(self):
        return {**asdict(self), 'z': self.z}


@dataclass(frozen=True)
class MomentVerificationReport:
    n_trials: int
    entries: List[MomentEntry] = field(default_factory=list)
    diagnostics: List[MomentEntry] = field(default_factory=list)
    z_limit: float = 3.0

    @property
    def passed(self) -> bool:
        return all(abs(entry.z) <= self.z_limit for entry in self.entries)

    @property
    def max_abs_z(self) -> float:
        return max((abs(entry.z) for entry in self.entries), default=0.0)
