import numpy as np

from mulinl.models.model import ProblemModel


MAX_AXIS_RATIO = 10.0


class Ellipse2D(ProblemModel):
    name = 'ellipse2d'
    l = 2
    m = 5
    coordinate_blocks = ((0, 2),)
    column_names = ('x', 'y')

    def __init__(self, max_axis_ratio=MAX_AXIS_RATIO, **kwargs):
        super().__init__(**kwargs)
        self.max_axis_ratio = max_axis_ratio

    def carriers(self, points):
        (x, y) = np.asarray(points, dtype=float).T
        return np.stack([x, y, x * x, x * y, y * y], axis=-1)[:, None, :]

    def jacobians(self, points):
        (x, y) = np.asarray(points, dtype=float).T
        jacobians = np.zeros((len(x), 1, 5, 2))
        jacobians[:, 0, 0, 0] = 1
        jacobians[:, 0, 1, 1] = 1
        jacobians[:, 0, 2, 0] = 2 * x
        jacobians[:, 0, 3, 0] = y
        jacobians[:, 0, 3, 1] = x
        jacobians[:, 0, 4, 1] = 2 * y
        return jacobians

    @staticmethod
    def quadratic_form(hypothesis):
        (_, _, a, b, c) = hypothesis.theta
        return np.array([[a, b / 2], [b / 2, c]])

    def validate_hypothesis(self, hypothesis):
        (_, _, a, b, c) = hypothesis.theta
        if not 4 * a * c - b * b > 0:
            return False
        parameters = self.ellipse_parameters(hypothesis)
        if parameters is None:
            return False
        (_, semi_axes, _) = parameters
        return semi_axes[0] <= self.max_axis_ratio * semi_axes[1]

    def ellipse_parameters(self, hypothesis):
        quadratic = self.quadratic_form(hypothesis)
        linear = hypothesis.theta[:2]
        alpha = hypothesis.alpha
        if np.linalg.det(quadratic) <= 0:
            return None
        if quadratic[0, 0] < 0:
            (quadratic, linear, alpha) = (-quadratic, -linear, -alpha)
        center = np.linalg.solve(2 * quadratic, -linear)
        level = alpha - center @ quadratic @ center - linear @ center
        if not level > 0:
            return None
        (eigenvalues, eigenvectors) = np.linalg.eigh(quadratic)
        semi_axes = np.sqrt(level / eigenvalues)
        major = eigenvectors[:, 0]
        angle = float(np.arctan2(major[1], major[0]))
        return center, semi_axes, angle

    def geometry(self, hypothesis, **options):
        parameters = self.ellipse_parameters(hypothesis)
        if parameters is None:
            return {}
        (center, semi_axes, angle) = parameters
        return {'center': center, 'semi_axes': semi_axes, 'angle': angle}
