from .csv_columns import *
from .defaults import *
from .figure_presets import *
