from enum import Enum

__all__ = ('OutputFormat',)


class OutputFormat(str, Enum):
    TEXT = 'text'
    CSV = 'csv'
    JSON = 'json'
