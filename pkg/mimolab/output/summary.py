import json
import logging
import math
from pathlib import Path

logger = logging.getLogger(__name__)

__all__ = ('to_jsonable', 'write_summary')


def to_jsonable(value):
    """Replace non-finite floats by None so the document stays strict JSON."""
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if hasattr(value, 'item'):
        return to_jsonable(value.item())
    return value


def write_summary(summary: dict, path) -> Path:
    path = Path(path)
    with path.open('w', encoding='utf-8') as handle:
        json.dump(to_jsonable(summary), handle, indent=2, sort_keys=False)
        handle.write('\n')
    logger.info('Wrote summary to %s', path)
    return path
