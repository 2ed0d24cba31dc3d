from .summary import *
from .tables import *
