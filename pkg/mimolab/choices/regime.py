from enum import Enum

__all__ = ('Regime',)


class Regime(str, Enum):
    PERFECT_PCE = 'perfect_pce'
    NOISE_LIMITED = 'noise_limited'
    CONTAMINATION_LIMITED = 'contamination_limited'
    BALANCED = 'balanced'
    FULL_LOAD = 'full_load'

    def __str__(self):
        return {
            'perfect_pce': 'Perfect pilot contamination elimination',
            'noise_limited': 'Noise dominated',
            'contamination_limited': 'Pilot contamination dominated',
            'balanced': 'Balanced exponents',
            'full_load': 'Users grow linearly with antennas',
        }[self.value]
