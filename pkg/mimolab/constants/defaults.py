__all__ = ('DEFAULT_M_GRID', 'DOMINANCE_THRESHOLD', 'CONDITION_LIMIT', 'LITERAL_MAX_M', 'DEFAULT_MASTER_SEED', 'MIN_SWEEP_TRIALS')

DEFAULT_M_GRID = (100, 200, 300, 400, 500, 600)

# "a >> b" is read as a >= 10 b
DOMINANCE_THRESHOLD = 10.0

CONDITION_LIMIT = 1e12
LITERAL_MAX_M = 64
DEFAULT_MASTER_SEED = 2017
MIN_SWEEP_TRIALS = 100
