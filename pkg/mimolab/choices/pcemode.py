from enum import Enum

__all__ = ('PceMode',)


class PceMode(str, Enum):
    PERFECT = 'perfect'
    IMPERFECT = 'imperfect'
