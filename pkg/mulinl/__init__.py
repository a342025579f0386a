from mulinl.estimation_errors import *
from mulinl.bases.errors import *
from mulinl.bases.pipeline import EstimationResult, \
                                  EstimatorConfig, \
                                  StructureEstimate, \
                                  TolerancesConfig
from mulinl.estimator import Estimator
from mulinl.models import *

__version__ = '0.1.0'
