from .analysisbase import PrecoderAnalysisBase
from .mrtanalysis import MrtAnalysis
from .run_precoder_operations import ANALYSIS_CLASSES, get_analysis_class, run_precoder_operation
from .zfanalysis import ZfAnalysis
