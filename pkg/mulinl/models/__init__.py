from mulinl.models.model import *
from mulinl.models.normalization import *
from mulinl.models.line_2d import Line2D
from mulinl.models.ellipse_2d import Ellipse2D
from mulinl.models.cylinder_3d import Cylinder3D, \
                                      CylinderTolerances
from mulinl.models.fundamental_matrix import FundamentalMatrix
from mulinl.models.homography import Homography
