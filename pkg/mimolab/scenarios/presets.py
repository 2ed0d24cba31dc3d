import logging
from importlib import resources
from typing import List

from mimolab.exceptions import ConfigurationError
from mimolab.models import ScenarioCase

from .parser import parse_scenario

logger = logging.getLogger(__name__)

__all__ = ('PRESET_TABLES', 'preset_text', 'load_preset', 'find_case')

PRESET_TABLES = ('table1', 'table2')


def preset_text(name: str) -> str:
    if name not in PRESET_TABLES:
        raise ConfigurationError(f'unknown preset table {name!r}, expected one of {", ".join(PRESET_TABLES)}')
    return resources.files('mimolab.scenarios').joinpath('presets', f'{name}.ini').read_text(encoding='utf-8')


def load_preset(name: str) -> List[ScenarioCase]:
    return parse_scenario(preset_text(name))


def find_case(cases: List[ScenarioCase], case_id: str) -> ScenarioCase:
    """Look a case up by id; a bare number such as '11' matches 'case11'."""
    wanted = {str(case_id), f'case{case_id}'}
    for case in cases:
        if case.case_id in wanted:
            return case
    raise ConfigurationError(f'no case {case_id!r}; available: {", ".join(case.case_id for case in cases)}')
