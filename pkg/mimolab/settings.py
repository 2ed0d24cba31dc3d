import os
from functools import lru_cache
from typing import List

from pydantic import BaseModel, Field, ValidationError, field_validator

from mimolab.constants import CONDITION_LIMIT, DEFAULT_M_GRID, DEFAULT_MASTER_SEED, DOMINANCE_THRESHOLD, LITERAL_MAX_M

__all__ = ('LabSettingsModel', 'SimulationSettings', 'AnalysisSettings', 'OutputSettings', 'get_lab_settings', 'settings_from_env')


class SimulationSettings(BaseModel):
    n_trials: int = Field(default=2000, ge=100)
    moment_trials: int = Field(default=10000, ge=100)
    workers: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=250, ge=1)


class AnalysisSettings(BaseModel):
    dominance_threshold: float = Field(default=DOMINANCE_THRESHOLD)
    condition_limit: float = Field(default=CONDITION_LIMIT, gt=1)
    literal_max_M: int = Field(default=LITERAL_MAX_M, ge=2)

    @field_validator('dominance_threshold', mode='before')
    def validate_threshold(cls, v):
        if float(v) <= 1:
            raise ValueError('Dominance threshold must be greater than 1')
        return v


class OutputSettings(BaseModel):
    plots: bool = Field(default=True)
    float_format: str = Field(default='%.10g')


class LabSettingsModel(BaseModel):
    master_seed: int = Field(default=DEFAULT_MASTER_SEED, ge=0)
    m_grid: List[int] = Field(default_factory=lambda: list(DEFAULT_M_GRID))
    simulation: SimulationSettings = Field(default_factory=SimulationSettings)
    analysis: AnalysisSettings = Field(default_factory=AnalysisSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)

    @field_validator('m_grid', mode='before')
    def validate_grid(cls, v):
        if isinstance(v, str):
            v = [int(item) for item in v.split(',') if item.strip()]
        if not v or any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError('M grid must be a non-empty, strictly increasing list')
        if v[0] < 2:
            raise ValueError('M grid values must be at least 2')
        return v


ENV_MAPPING = {
    'MIMO_LAB_SEED': ('master_seed',),
    'MIMO_LAB_GRID': ('m_grid',),
    'MIMO_LAB_TRIALS': ('simulation', 'n_trials'),
    'MIMO_LAB_WORKERS': ('simulation', 'workers'),
}


def settings_from_env(environ=None) -> LabSettingsModel:
    environ = os.environ if environ is None else environ
    raw_config = {}
    for variable, path in ENV_MAPPING.items():
        value = environ.get(variable)
        if value is None or value == '':
            continue
        target = raw_config
        for key in path[:-1]:
            target = target.setdefault(key, {})
        target[path[-1]] = value

    try:
        return LabSettingsModel(**raw_config)
    except ValidationError as e:
        raise RuntimeError(f'Invalid lab configuration: {e}')


# Helper function
@lru_cache(maxsize=1)
def get_lab_settings() -> LabSettingsModel:
    return settings_from_env()
