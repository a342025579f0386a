import numpy as np

from mulinl.models.model import ProblemModel


class Line2D(ProblemModel):
    name = 'line2d'
    l = 2
    m = 2
    coordinate_blocks = ((0, 2),)
    column_names = ('x', 'y')

    def carriers(self, points):
        return np.asarray(points, dtype=float)[:, None, :].copy()

    def jacobians(self, points):
        return np.broadcast_to(np.eye(2), (len(points), 1, 2, 2)).copy()

    def line_parameters(self, hypothesis):
        return hypothesis.theta, hypothesis.alpha

    def geometry(self, hypothesis, **options):
        (normal, offset) = self.line_parameters(hypothesis)
        return {'normal': normal, 'offset': offset}
