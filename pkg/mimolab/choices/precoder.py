from enum import Enum

__all__ = ('Precoder',)


class Precoder(str, Enum):
    MRT = 'mrt'
    ZF = 'zf'

    def __str__(self):
        return {
            'mrt': 'Maximal-ratio transmission',
            'zf': 'Zero-forcing',
        }[self.value]
