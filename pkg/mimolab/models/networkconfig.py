import math

from pydantic import BaseModel, ConfigDict, Field, model_validator

__all__ = ('NetworkConfig', 'antenna_dimension')


def antenna_dimension(M: int, c: float) -> int:
    """Number of directions Delta = round(c * M), ties rounded half up."""
    return int(math.floor(c * M + 0.5 + 1e-9))


class NetworkConfig(BaseModel):
    """Static parameters of one homogeneous multi-cell downlink scenario.

    Every cell shares the correlation level, inter-cell fading, training energy,
    transmit SNR, user count and pilot contamination level.
    """

    model_config = ConfigDict(frozen=True)

    L: int = Field(default=7, ge=2)
    M: int = Field(ge=2)
    K: int = Field(ge=1)
    c: float = Field(default=0.6, gt=0, le=1)
    alpha: float = Field(default=0.3, gt=0, lt=1)
    L_p: int = Field(default=0, ge=0)
    E_t: float = Field(gt=0)
    rho: float = Field(gt=0)

    @model_validator(mode='after')
    def validate_dimensions(self):
        delta = antenna_dimension(self.M, self.c)
        if delta < 1 or delta > self.M:
            raise ValueError(f'round(c*M) = {delta} is outside [1, {self.M}] for c={self.c}, M={self.M}')
        if self.K > delta:
            raise ValueError(f'K={self.K} exceeds the channel dimension Delta={delta} at M={self.M}')
        if self.L_p > self.L - 1:
            raise ValueError(f'L_p={self.L_p} exceeds L-1={self.L - 1}')
        return self

    @property
    def delta(self) -> int:
        return antenna_dimension(self.M, self.c)

    @property
    def c_eff(self) -> float:
        # Delta/M, equal to c whenever c*M is an integer
        return self.delta / self.M

    @property
    def beta_own(self) -> float:
        return self.M / self.delta

    @property
    def beta_cross(self) -> float:
        return self.alpha * self.M / self.delta

    @property
    def Q(self) -> float:
        return 1.0 / (self.c_eff / self.E_t + 1.0 + self.L_p * self.alpha)

    @property
    def n_cells(self) -> int:
        """Cells instantiated per trial: the victim plus its contaminating cells."""
        return self.L_p + 1

    def with_updates(self, **changes) -> 'NetworkConfig':
        return NetworkConfig(**{**self.model_dump(), **changes})
