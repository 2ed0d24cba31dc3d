from .casesweep import *
from .reproducepreset import *
from .verifymoments import *
