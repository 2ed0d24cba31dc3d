import configparser
import io
import logging
import re
from typing import List

from pydantic import ValidationError

from mimolab.exceptions import ScenarioParseError
from mimolab.models import PowerLawParam, ScenarioCase

logger = logging.getLogger(__name__)

__all__ = ('parse_scenario', 'emit_scenario')

POWER_LAW_KEYS = ('E_t', 'rho', 'K')
INTEGER_KEYS = ('L',)
FLOAT_KEYS = ('c', 'alpha')
KNOWN_KEYS = POWER_LAW_KEYS + INTEGER_KEYS + FLOAT_KEYS + ('L_p', 'grid', 'precoder')


def _new_parser() -> configparser.ConfigParser:
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str  # keys are case sensitive (E_t, K, L_p)
    return parser


def _locate(text: str, section: str, key: str):
    """Line number of `key` inside `[section]` (or [DEFAULT]), if present."""
    current = None
    candidates = {}
    for number, line in enumerate(text.splitlines(), start=1):
        header = re.match(r'^\s*\[(.+)\]\s*$', line)
        if header:
            current = header.group(1).strip()
            continue
        if re.match(rf'^\s*{re.escape(key)}\s*[=:]', line) and current in (section, 'DEFAULT'):
            candidates[current] = number
    return candidates.get(section, candidates.get('DEFAULT'))


def _int_list(value: str) -> List[int]:
    return [int(item) for item in value.split(',') if item.strip()]


def _parse_section(text: str, section: str, items: dict) -> ScenarioCase:
    for key in items:
        if key not in KNOWN_KEYS:
            raise ScenarioParseError(f'unknown key {key!r} in [{section}]', line=_locate(text, section, key), field=key)

    data = {'case_id': section}
    for key in KNOWN_KEYS:
        if key not in items:
            if key in POWER_LAW_KEYS:
                raise ScenarioParseError(f'missing required key {key!r} in [{section}]', field=f'[{section}] {key}')
            continue
        value = items[key].strip()
        try:
            if key in POWER_LAW_KEYS:
                data[key] = PowerLawParam.from_text(value)
            elif key in INTEGER_KEYS:
                data[key] = int(value)
            elif key in FLOAT_KEYS:
                data[key] = float(value)
            elif key == 'L_p':
                data[key] = _int_list(value) if ',' in value else int(value)
            elif key == 'grid':
                data[key] = _int_list(value)
            else:
                data[key] = value.lower()
        except (ValueError, ValidationError) as err:
            raise ScenarioParseError(f'invalid value {value!r} for {key!r} in [{section}]: {err}', line=_locate(text, section, key), field=key) from err

    try:
        return ScenarioCase(**data)
    except ValidationError as err:
        location = err.errors()[0]['loc']
        key = str(location[0]) if location else None
        line = _locate(text, section, key) if key else None
        raise ScenarioParseError(f'invalid case [{section}]: {err}', line=line, field=key) from err


def parse_scenario(text: str) -> List[ScenarioCase]:
    parser = _new_parser()
    try:
        parser.read_string(text)
    except configparser.ParsingError as err:
        # MissingSectionHeaderError carries lineno instead of an errors list
        errors = getattr(err, 'errors', None)
        line = errors[0][0] if errors else getattr(err, 'lineno', None)
        raise ScenarioParseError(f'malformed scenario document: {err}', line=line) from err
    except configparser.Error as err:
        raise ScenarioParseError(f'malformed scenario document: {err}', line=getattr(err, 'lineno', None)) from err

    if not parser.sections():
        raise ScenarioParseError('scenario document defines no cases')

    cases = []
    for section in parser.sections():
        case = _parse_section(text, section, dict(parser.items(section)))
        case.check()
        cases.append(case)
    logger.debug('Parsed %s scenario cases', len(cases))
    return cases


def emit_scenario(cases: List[ScenarioCase]) -> str:
    parser = _new_parser()
    for case in cases:
        parser[case.case_id] = {
            'precoder': case.precoder.value,
            'E_t': case.E_t.to_text(),
            'rho': case.rho.to_text(),
            'K': case.K.to_text(),
            'L_p': ','.join(str(value) for value in case.L_p) if isinstance(case.L_p, list) else str(case.L_p),
            'grid': ','.join(str(M) for M in case.grid),
            'L': str(case.L),
            'c': repr(case.c),
            'alpha': repr(case.alpha),
        }
    buffer = io.StringIO()
    parser.write(buffer)
    return buffer.getvalue()
