from .parser import *
from .presets import *
