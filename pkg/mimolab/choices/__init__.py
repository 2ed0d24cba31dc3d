from .metric import *
from .outputformat import *
from .pcemode import *
from .precoder import *
from .quarticcase import *
from .regime import *
