from .csiestimate import *
from .directionbasis import *
from .networkconfig import *
from .scalingexponents import *
from .scenariocase import *
from .sinrbreakdown import *
from .trialresult import *
from .zfquantities import *
