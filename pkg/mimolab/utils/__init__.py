from .channel import *
from .mrt import *
from .rng import *
from .scaling import *
from .statistics import *
from .training import *
from .zf import *
