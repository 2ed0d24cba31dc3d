import math
from typing import List, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from mimolab.choices import Precoder
from mimolab.exceptions import ConfigurationError, ScenarioValidationError
from mimolab.settings import get_lab_settings

from .networkconfig import NetworkConfig
from .scalingexponents import ScalingExponents

__all__ = ('PowerLawParam', 'ScenarioCase')


class PowerLawParam(BaseModel):
    """coefficient * M**exponent, optionally floored to an integer."""

    model_config = ConfigDict(frozen=True)

    coefficient: float = Field(gt=0)
    exponent: float = Field(default=0.0)
    floor_to_int: bool = Field(default=False)

    @classmethod
    def from_text(cls, text: str) -> 'PowerLawParam':
        parts = text.split()
        if len(parts) not in (2, 3):
            raise ValueError(f"expected '<coefficient> <exponent> [floor]', got {text!r}")
        if len(parts) == 3 and parts[2].lower() != 'floor':
            raise ValueError(f"third token must be 'floor', got {parts[2]!r}")
        try:
            coefficient, exponent = float(parts[0]), float(parts[1])
        except ValueError as err:
            raise ValueError(f'malformed number in {text!r}') from err
        return cls(coefficient=coefficient, exponent=exponent, floor_to_int=len(parts) == 3)

    def to_text(self) -> str:
        text = f'{self.coefficient!r} {self.exponent!r}'
        return f'{text} floor' if self.floor_to_int else text

    def evaluate(self, M: int) -> Union[int, float]:
        if M < 1:
            raise ConfigurationError(f'M must be at least 1, got {M}')
        value = self.coefficient * float(M) ** self.exponent
        if not self.floor_to_int:
            return value
        # 0.1 * 300 lands a hair under 30 in binary floating point
        floored = int(math.floor(value + 1e-9))
        if floored < 1:
            raise ConfigurationError(f'{self.to_text()} evaluates to {value} < 1 at M={M}')
        return floored


class ScenarioCase(BaseModel):
    model_config = ConfigDict(frozen=True)

    case_id: str = Field(min_length=1)
    E_t: PowerLawParam
    rho: PowerLawParam
    K: PowerLawParam
    L_p: Union[int, List[int]] = Field(default=0)
    grid: List[int] = Field(default_factory=lambda: list(get_lab_settings().m_grid))
    L: int = Field(default=7, ge=2)
    c: float = Field(default=0.6, gt=0, le=1)
    alpha: float = Field(default=0.3, gt=0, lt=1)
    precoder: Precoder = Field(default=Precoder.MRT)

    @field_validator('grid', mode='before')
    def validate_grid(cls, v):
        if not v or any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError('grid must be a non-empty, strictly increasing list')
        return v

    @field_validator('L_p', mode='before')
    def validate_lp(cls, v):
        values = v if isinstance(v, list) else [v]
        if any(int(item) < 0 for item in values):
            raise ValueError('L_p values must be non-negative')
        return v

    @model_validator(mode='after')
    def validate_lp_length(self):
        if isinstance(self.L_p, list) and len(self.L_p) != len(self.grid):
            raise ValueError(f'L_p list has {len(self.L_p)} entries but the grid has {len(self.grid)}')
        return self

    @property
    def lp_values(self) -> List[int]:
        return list(self.L_p) if isinstance(self.L_p, list) else [self.L_p] * len(self.grid)

    def lp_at(self, M: int) -> int:
        if not isinstance(self.L_p, list):
            return self.L_p
        if M not in self.grid:
            raise ScenarioValidationError(f'case {self.case_id}: L_p is only defined on the grid {self.grid}, not at M={M}', M=M, case_id=self.case_id)
        return self.L_p[self.grid.index(M)]

    def config_at(self, M: int) -> NetworkConfig:
        try:
            return NetworkConfig(
                L=self.L,
                M=M,
                K=self.K.evaluate(M),
                c=self.c,
                alpha=self.alpha,
                L_p=self.lp_at(M),
                E_t=self.E_t.evaluate(M),
                rho=self.rho.evaluate(M),
            )
        except ScenarioValidationError:
            raise
        except (ValidationError, ConfigurationError) as err:
            raise ScenarioValidationError(f'case {self.case_id} is invalid at M={M}: {err}', M=M, case_id=self.case_id) from err

    def check(self) -> None:
        for M in self.grid:
            self.config_at(M)

    def with_grid(self, grid: List[int]) -> 'ScenarioCase':
        data = self.model_dump()
        data['grid'] = list(grid)
        if isinstance(self.L_p, list):
            data['L_p'] = [self.lp_at(M) for M in grid]
        return ScenarioCase(**data)

    def exponents(self) -> ScalingExponents:
        from mimolab.utils.statistics import fit_power_decay

        lp_values = self.lp_values
        perfect = all(value == 0 for value in lp_values)
        r_gamma = 0.0
        if not perfect and len(set(lp_values)) > 1:
            _, decay = fit_power_decay(list(zip(self.grid, lp_values)))
            r_gamma = min(max(decay, 0.0), 1.0)

        return ScalingExponents(
            r_t=-self.E_t.exponent,
            r_k=self.K.exponent,
            r_rho=-self.rho.exponent,
            r_gamma=r_gamma,
            perfect_pce=perfect,
        )
